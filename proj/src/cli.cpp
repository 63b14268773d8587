#include "anyon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "anyon/builtin.hpp"
#include "anyon/errors.hpp"
#include "anyon/fermion.hpp"
#include "anyon/json_io.hpp"
#include "anyon/partial_transpose.hpp"
#include "anyon/zero_locus.hpp"

namespace anyon {

namespace {

// Usage and I/O failures (exit 2), as opposed to domain errors (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(cplx v) {
  if (v.imag() == 0) return num(v.real());
  return num(v.real()) + (v.imag() < 0 ? "-" : "+") + num(std::abs(v.imag())) + "i";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("cannot parse " + what + " '" + s + "'");
  return v;
}

// "0.5", "0.2i", "-i", "0.1+0.2i", "0.1-0.2i"
cplx parse_complex(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw UsageError("empty matrix entry");
  if (s.back() != 'i') return parse_double(s, "matrix entry");
  s.pop_back();
  std::size_t split_at = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split_at = k;
      break;
    }
  auto imag = [](std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, "matrix entry");
  };
  if (split_at == std::string::npos) return {0.0, imag(s)};
  return {parse_double(s.substr(0, split_at), "matrix entry"), imag(s.substr(split_at))};
}

struct CategoryArgs {
  std::string builtin;
  std::string json;
  int nu = 1;
  int k = 2;
};

struct DimerArgs {
  std::string a;
  std::string b;
  std::string p;
  std::vector<std::string> pmatrix;
  std::string p8;
};

void add_category_options(CLI::App* cmd, CategoryArgs& c) {
  auto* b = cmd->add_option("--builtin", c.builtin, "Builtin category: ising, fibonacci, su2, su2_K, su3_3");
  auto* j = cmd->add_option("--json", c.json, "Category JSON file");
  b->excludes(j);
  cmd->add_option("--nu", c.nu, "Ising index (odd)");
  cmd->add_option("--k", c.k, "su(2) level");
}

void add_dimer_options(CLI::App* cmd, DimerArgs& d, bool weights) {
  cmd->add_option("--a", d.a, "Label of anyon a")->required();
  cmd->add_option("--b", d.b, "Label of anyon b")->required();
  if (!weights) return;
  cmd->add_option("--p", d.p, "Channel weights, e.g. I=0.5,psi=0.5");
  cmd->add_option("--pmatrix", d.pmatrix, "Channel matrix, e.g. 8=0.5,0.1+0.2i;0.1-0.2i,0.5 (repeatable)");
  cmd->add_option("--p8", d.p8, "Two-dimensional channel '8' as p=..,qr=..,qi=..");
}

std::shared_ptr<const Category> load(const CategoryArgs& c) {
  if (c.builtin.empty() == c.json.empty()) throw UsageError("exactly one of --builtin or --json is required");
  try {
    if (!c.json.empty()) return std::make_shared<const Category>(load_category(c.json));
    return std::make_shared<const Category>(builtin(c.builtin, c.nu, c.k));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

DimerState make_dimer(const std::shared_ptr<const Category>& cat, const DimerArgs& d) {
  const int a = cat->find(d.a), b = cat->find(d.b);
  std::map<int, CMatrix> blocks;
  auto put = [&](int f, CMatrix m) {
    if (!blocks.emplace(f, std::move(m)).second)
      throw InvalidInput("channel " + cat->label(f).name + " given more than once");
  };
  if (!d.p.empty())
    for (const std::string& item : split(d.p, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("--p entries must be LABEL=value, got '" + item + "'");
      put(cat->find(item.substr(0, eq)), CMatrix::scalar(parse_double(item.substr(eq + 1), "--p weight")));
    }
  for (const std::string& item : d.pmatrix) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--pmatrix must be LABEL=row;row, got '" + item + "'");
    std::vector<std::vector<cplx>> rows;
    for (const std::string& row : split(item.substr(eq + 1), ';')) {
      rows.emplace_back();
      for (const std::string& e : split(row, ',')) rows.back().push_back(parse_complex(e));
    }
    CMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw UsageError("--pmatrix for " + item.substr(0, eq) + " is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    put(cat->find(item.substr(0, eq)), std::move(m));
  }
  if (!d.p8.empty()) {
    double p = 0, qr = 0, qi = 0;
    for (const std::string& item : split(d.p8, ',')) {
      auto eq = item.find('=');
      const std::string key = item.substr(0, eq);
      if (eq == std::string::npos || (key != "p" && key != "qr" && key != "qi"))
        throw UsageError("--p8 entries must be p=, qr= or qi=, got '" + item + "'");
      double v = parse_double(item.substr(eq + 1), "--p8 value");
      (key == "p" ? p : key == "qr" ? qr : qi) = v;
    }
    put(cat->find("8"), CMatrix{{p, cplx(qr, qi)}, {cplx(qr, -qi), 1.0 - p}});
  }
  if (blocks.empty()) {
    // A single one-dimensional channel needs no weights.
    const auto ch = cat->channels(a, b);
    if (ch.size() != 1 || cat->N(a, b, ch[0]) != 1)
      throw InvalidInput(d.a + " x " + d.b + " has several channels; give --p, --pmatrix or --p8");
    blocks.emplace(ch[0], CMatrix::scalar(1.0));
  }
  return DimerState::make(cat, a, b, std::move(blocks));
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_validate(const CategoryArgs& ca, const VerifyOptions& opt, std::ostream& out) {
  auto cat = load(ca);
  std::vector<CheckReport> reps = verify_all(*cat, opt);
  reps.push_back(verify_perron_dimensions(*cat, opt));
  bool ok = true;
  out << "category " << cat->name() << " (" << cat->size() << " labels)\n";
  for (const auto& r : reps) {
    ok = ok && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.check << " max_residual=" << num(r.max_residual)
        << " checked=" << r.checked << (r.sampled ? " sampled" : "");
    if (!r.worst.empty()) out << " worst=" << r.worst;
    if (!r.first_violation.empty()) out << " first_violation=" << r.first_violation;
    out << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_aln(const CategoryArgs& ca, const DimerArgs& da, const std::string& side, const std::string& format,
            const std::string& path, std::ostream& out) {
  auto cat = load(ca);
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
  if (side != "A" && side != "B") throw UsageError("--side must be A or B");
  DimerState s = make_dimer(cat, da);
  PTResult pt = side == "A" ? partial_transpose_a(s) : partial_transpose_b(s);
  std::optional<double> s_ace;
  if (s.multiplicity_free()) s_ace = ace(s);

  Output o(path, out);
  if (format == "json") {
    nlohmann::json doc = pt_to_json(pt, *cat);
    doc["category"] = cat->name();
    doc["dimer"] = dimer_to_json(s);
    doc["aee"] = aee(s);
    doc["mutual_information"] = mutual_information(s);
    doc["ace"] = s_ace ? nlohmann::json(*s_ace) : nlohmann::json();
    *o << doc.dump(1) << "\n";
    return 0;
  }
  *o << "category " << cat->name() << "\n";
  *o << "dimer a=" << da.a << " b=" << da.b << "\n";
  *o << "aln " << num(pt.aln()) << "\n";
  *o << "aee " << num(aee(s)) << "\n";
  *o << "mutual_information " << num(mutual_information(s)) << "\n";
  *o << "ace " << (s_ace ? num(*s_ace) : std::string("unsupported (fusion multiplicities)")) << "\n";
  *o << "side " << side << " quantum_trace " << num(pt.quantum_trace()) << "\n";
  for (const auto& [c, m] : pt.m)
    *o << "channel " << cat->label(c).name << " dim=" << m.rows() << " weight=" << num(pt.weight.at(c))
       << " trace_norm=" << num(trace_norm(m)) << "\n";
  return 0;
}

std::pair<std::shared_ptr<const Category>, std::pair<int, int>> family(const CategoryArgs& ca, const DimerArgs& da) {
  auto cat = load(ca);
  const int a = cat->find(da.a), b = cat->find(da.b);
  const std::size_t n = cat->channels(a, b).size();
  if (n < 2 || n > 3)
    throw Unsupported(da.a + " x " + da.b + " has " + std::to_string(n) + " channels; sweeps need 2 or 3");
  return {cat, {a, b}};
}

void write_header(std::ostream& os, const Category& cat, const std::vector<int>& channels, bool werner) {
  for (int c : channels) os << "p_" << cat.label(c).name << ",";
  if (werner) os << "werner,";
  os << "aln\n";
}

int cmd_sweep(const CategoryArgs& ca, const DimerArgs& da, int resolution, bool werner, int threads,
              const std::string& path, std::ostream& out) {
  auto [cat, ab] = family(ca, da);
  if (resolution < 1) throw UsageError("--resolution must be positive");
  SweepGrid g = sweep(cat, ab.first, ab.second, resolution, threads);
  if (werner && g.channels.size() != 2) throw InvalidInput("--werner needs a two-channel family");
  Output o(path, out);
  write_header(*o, *cat, g.channels, werner);
  for (const auto& r : g.records) {
    for (double p : r.p) *o << num(p) << ",";
    if (werner) *o << num(werner_ln(r.p[0])) << ",";
    *o << num(r.aln) << "\n";
  }
  return 0;
}

int cmd_zero_locus(const CategoryArgs& ca, const DimerArgs& da, int resolution, double tol, int threads,
                   const std::string& path, std::ostream& out) {
  auto [cat, ab] = family(ca, da);
  if (resolution < 1) throw UsageError("--resolution must be positive");
  const auto [a, b] = ab;
  SweepGrid g = sweep(cat, a, b, resolution, threads);
  std::vector<ZeroPoint> zeros = zero_set(g, tol);

  out << "category " << cat->name() << "\n";
  out << "dimer a=" << da.a << " b=" << da.b << "\n";
  out << "channels";
  for (int c : g.channels) out << " " << cat->label(c).name;
  out << "\n";
  try {
    DeltaMatrix d = delta_matrix(*cat, a, b);
    out << "im_rank " << d.im_rank << "\n";
    out << "r0 " << d.r0 << "\n";
  } catch (const Unsupported&) {
    out << "im_rank unavailable (fusion multiplicities)\n";
  }
  out << "separable_point";
  for (const auto& [f, p] : separable_point(*cat, a, b)) out << " " << cat->label(f).name << "=" << num(p);
  out << "\n";
  out << "zeros " << zeros.size() << "\n";
  if (path.empty()) {
    for (const auto& z : zeros) {
      out << "zero";
      for (double p : z.p) out << " " << num(p);
      out << " aln=" << num(z.aln) << (z.refined ? " refined" : "") << "\n";
    }
    return 0;
  }
  Output o(path, out);
  write_header(*o, *cat, g.channels, false);
  for (const auto& z : zeros) {
    for (double p : z.p) *o << num(p) << ",";
    *o << num(z.aln) << "\n";
  }
  return 0;
}

int cmd_fermionic_demo(int modes, std::ostream& out) {
  if (modes < 2 || modes > kMaxModes)
    throw UsageError("--modes must be in 2.." + std::to_string(kMaxModes));
  // Majorana dimer on modes 1 and 2, remaining modes empty.
  FockOperator rho = majorana_dimer();
  if (modes > 2) {
    const std::size_t rest = std::size_t{1} << (modes - 2);
    CMatrix vac(rest, rest);
    vac(0, 0) = 1.0;
    rho = {modes, kron(rho.m, vac)};
  }
  const double f_ln = fermionic_ln(rho, {1});
  auto ising1 = std::make_shared<const Category>(ising(1));
  const int sigma = ising1->find("sigma");
  const double a_ln = aln(DimerState::from_weights(ising1, sigma, sigma, {{ising1->find("I"), 1.0}}));
  const double diff = std::abs(f_ln - a_ln);

  double clifford = 0;
  for (int i = 1; i <= 2 * modes; ++i)
    for (int j = 1; j <= 2 * modes; ++j) {
      const CMatrix ci = majorana(modes, i).m, cj = majorana(modes, j).m;
      const CMatrix expect = (i == j ? 2.0 : 0.0) * CMatrix::identity(ci.rows());
      clifford = std::max(clifford, max_abs_diff(ci * cj + cj * ci, expect));
    }
  const CMatrix u = vortex_exchange(modes, 2, 3).m;
  const CMatrix c2 = majorana(modes, 2).m, c3 = majorana(modes, 3).m;
  const double exchange =
      std::max(max_abs_diff(u * c2 * u.adjoint(), c3), max_abs_diff(u * c3 * u.adjoint(), -1.0 * c2));

  out << "modes " << modes << "\n";
  out << "majorana_dimer_ln " << num(f_ln) << "\n";
  out << "ising_sigma_sigma_aln " << num(a_ln) << "\n";
  out << "difference " << num(diff) << "\n";
  out << "clifford_residual " << num(clifford) << "\n";
  out << "exchange_residual " << num(exchange) << "\n";
  const bool ok = diff < 1e-10 && clifford < 1e-12 && exchange < 1e-12;
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_export(const CategoryArgs& ca, const std::string& path, std::ostream& out) {
  auto cat = load(ca);
  Output o(path, out);
  *o << category_to_json(*cat).dump(1) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anyonic partial transpose and logarithmic negativity"};
  app.name("anyon_neg");
  app.require_subcommand(1, 1);

  CategoryArgs ca;
  DimerArgs da;
  VerifyOptions vopt;
  std::string out_path, format = "text", side = "A";
  int resolution = 100, threads = 0, modes = 2;
  double tol = 1e-8;
  bool werner = false;

  auto* validate = app.add_subcommand("validate", "Check the category axioms");
  add_category_options(validate, ca);
  validate->add_option("--tol", vopt.tol, "Residual tolerance");
  validate->add_option("--samples", vopt.samples, "Random tuples per sampled check");
  validate->add_option("--budget", vopt.exhaustive_budget, "Largest exhaustive tuple count");
  validate->add_option("--seed", vopt.seed, "Sampling seed");

  auto* aln_cmd = app.add_subcommand("aln", "ALN, AEE and ACE of a dimer");
  add_category_options(aln_cmd, ca);
  add_dimer_options(aln_cmd, da, true);
  aln_cmd->add_option("--side", side, "Transposed side, A or B");
  aln_cmd->add_option("--format", format, "text or json");
  aln_cmd->add_option("--out", out_path, "Output file");

  auto* sweep_cmd = app.add_subcommand("sweep", "ALN over the channel-probability simplex (CSV)");
  add_category_options(sweep_cmd, ca);
  add_dimer_options(sweep_cmd, da, false);
  sweep_cmd->add_option("--resolution", resolution, "Grid steps per unit probability");
  sweep_cmd->add_flag("--werner", werner, "Add the Werner reference column");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0: automatic)");
  sweep_cmd->add_option("--out", out_path, "CSV file");

  auto* zero_cmd = app.add_subcommand("zero-locus", "Zero set of the ALN over the simplex");
  add_category_options(zero_cmd, ca);
  add_dimer_options(zero_cmd, da, false);
  zero_cmd->add_option("--resolution", resolution, "Grid steps per unit probability");
  zero_cmd->add_option("--tol", tol, "ALN threshold for a zero");
  zero_cmd->add_option("--threads", threads, "Worker threads (0: automatic)");
  zero_cmd->add_option("--out", out_path, "CSV file for the zero points");

  auto* demo = app.add_subcommand("fermionic-demo", "Majorana dimer versus Ising sigma-sigma");
  demo->add_option("--modes", modes, "Fermionic modes (2..6)");

  auto* exp = app.add_subcommand("export", "Write a category as JSON");
  add_category_options(exp, ca);
  exp->add_option("--out", out_path, "JSON file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(ca, vopt, out);
    if (aln_cmd->parsed()) return cmd_aln(ca, da, side, format, out_path, out);
    if (sweep_cmd->parsed()) return cmd_sweep(ca, da, resolution, werner, threads, out_path, out);
    if (zero_cmd->parsed()) return cmd_zero_locus(ca, da, resolution, tol, threads, out_path, out);
    if (demo->parsed()) return cmd_fermionic_demo(modes, out);
    if (exp->parsed()) return cmd_export(ca, out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace anyon
