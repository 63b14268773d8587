#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "anyon/linalg.hpp"

namespace anyon::detail {

// Thread-safe memo for lazily computed symbol blocks. Entries are never
// erased, so returned pointers remain valid while the cache lives.
template <class Key>
class BlockCache {
 public:
  template <class Make>
  const CMatrix* get(const Key& key, Make&& make) const {
    {
      std::shared_lock lock(mu_);
      auto it = blocks_.find(key);
      if (it != blocks_.end()) return it->second.get();
    }
    std::optional<CMatrix> value = make();
    if (!value) return nullptr;
    std::unique_lock lock(mu_);
    auto [it, inserted] = blocks_.try_emplace(key, nullptr);
    if (inserted) it->second = std::make_unique<CMatrix>(std::move(*value));
    return it->second.get();
  }

 private:
  mutable std::shared_mutex mu_;
  mutable std::map<Key, std::unique_ptr<CMatrix>> blocks_;
};

}  // namespace anyon::detail
