#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "wtaut/errors.hpp"
#include "wtaut/pullback.hpp"
#include "wtaut/schur.hpp"
#include "wtaut/semigroups.hpp"
#include "wtaut/serialize.hpp"
#include "wtaut/tautring.hpp"
#include "wtaut/wcycles.hpp"

using namespace wtaut;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr long kDefaultMaxAmbient = 4000;

enum ExitCode { kOk = 0, kUsage = 2, kData = 3, kResource = 4 };

struct RunConfig {
  std::string command;
  std::string genus;
  int genus_lo = -1;
  int genus_hi = -1;
  int max_degree = -1;
  std::string mode = "cm";
  std::string format = "json";
  bool unshifted = false;
  bool paper_sign = false;
  bool kappa0_substitute = false;
  bool chern_character = false;
  std::string output;
  std::string gaps;
  std::string partition;
  int power = 0;
  std::string at;
  int vars = 0;
  std::string kind = "shifted";
};

struct Result {
  Json payload;
  std::string text;  // csv / latex rendering
  std::vector<std::string> warnings;
};

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    long n = std::stol(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be an integer, got '" + v + "'");
  }
}

std::vector<std::string> split_list(std::string text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + s + "'");
    }
  }
  return out;
}

void resolve_genus(RunConfig& c, bool required) {
  if (c.genus.empty()) {
    if (required) throw UsageError("--genus is required");
    return;
  }
  static const std::regex single(R"(^\s*(-?\d+)\s*$)"), range(R"(^\s*(\d+)\s*(?:\.\.|:)\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(c.genus, m, single)) {
    c.genus_lo = c.genus_hi = std::stoi(m[1]);
  } else if (std::regex_match(c.genus, m, range)) {
    c.genus_lo = std::stoi(m[1]);
    c.genus_hi = std::stoi(m[2]);
  } else {
    throw UsageError("--genus must be an integer or a range a..b, got '" + c.genus + "'");
  }
  if (c.genus_lo < 0) throw UsageError("genus must be non-negative, got " + std::to_string(c.genus_lo));
  if (c.genus_lo > c.genus_hi) throw UsageError("empty genus range " + c.genus);
  long cap = env_long("WTAUT_MAX_GENUS", kDefaultMaxGenus);
  if (c.genus_hi > cap)
    throw ResourceError("genus " + std::to_string(c.genus_hi) + " exceeds the cap " + std::to_string(cap) +
                        "; use --genus " + std::to_string(cap) + " or raise WTAUT_MAX_GENUS");
}

void check_degree(const RunConfig& c, int g) {
  if (c.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  long cap = env_long("WTAUT_MAX_AMBIENT", kDefaultMaxAmbient);
  GradedAlgebraSpec a(g);
  if (static_cast<long>(a.dim(c.max_degree)) <= cap) return;
  int suggested = 0;
  while (static_cast<long>(a.dim(suggested + 1)) <= cap) ++suggested;
  throw ResourceError("degree " + std::to_string(c.max_degree) + " at genus " + std::to_string(g) + " needs " +
                      std::to_string(a.dim(c.max_degree)) + " monomials, above the cap " + std::to_string(cap) +
                      "; suggested bound: --max-degree " + std::to_string(suggested));
}

bool smooth(const RunConfig& c) { return c.mode == "smooth"; }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("format '" + c.format + "' is not available for " + c.command);
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

Result cmd_semigroups(const RunConfig& c, int g) {
  require_format(c, {"json", "csv", "latex"});
  Result r;
  r.payload = Json::array();
  std::ostringstream csv, tex;
  csv << "genus,gaps,sequence_head,partition_gr_gm1,partition_hprime\n";
  tex << "\\begin{tabular}{lll}\ngaps & $\\mu$ ($Gr_{g-1}$) & $\\mu$ ($\\mathcal{H}'$) \\\\\n\\hline\n";
  for (const auto& h : enumerate_semigroups(g, g)) {
    Json rec = semigroup_record(h);
    r.payload.push_back(rec);
    auto head = rec["sequence_head"].get<std::vector<long>>();
    std::vector<int> head_int(head.begin(), head.end());
    csv << g << ',' << csv_list(h.gaps()) << ',' << csv_list(head_int) << ','
        << csv_list(rec["partition_gr_gm1"].get<std::vector<int>>()) << ','
        << csv_list(rec["partition_hprime"].get<std::vector<int>>()) << '\n';
    tex << "(" << csv_list(h.gaps()) << ") & " << Partition(rec["partition_gr_gm1"].get<std::vector<int>>()).str()
        << " & " << Partition(rec["partition_hprime"].get<std::vector<int>>()).str() << " \\\\\n";
  }
  tex << "\\end{tabular}\n";
  r.text = c.format == "csv" ? csv.str() : tex.str();
  if (g >= 1)
    r.warnings.push_back("partition_gr_gm1 uses d = g-1, so the ordinary semigroup has partition (1^g); "
                         "partition_hprime of the ordinary semigroup is empty");
  return r;
}

Result cmd_class(const RunConfig& c, int g) {
  require_format(c, {"json", "csv", "latex"});
  if (!c.gaps.empty() && !c.partition.empty()) throw UsageError("--gaps and --partition are exclusive");
  CycleOptions options{.unshifted = c.unshifted, .substitute_kappa0 = c.kappa0_substitute};
  std::vector<CycleClass> cycles;
  if (!c.partition.empty()) {
    cycles.push_back(virtual_class(Partition::parse(c.partition), g, options));
  } else if (!c.gaps.empty()) {
    auto gaps = parse_int_list(c.gaps);
    auto h = NumericalSemigroup::from_gaps(gaps);
    if (h.genus() != g)
      throw DataError("gap list " + h.str() + " has genus " + std::to_string(h.genus()) + ", not " + std::to_string(g));
    cycles.push_back(weierstrass_class(h, options));
  } else {
    if (g < 1) throw UsageError("class needs genus >= 1");
    for (const auto& h : enumerate_semigroups(g, g)) cycles.push_back(weierstrass_class(h, options));
  }
  Result r;
  r.payload = Json::array();
  std::ostringstream csv;
  csv << "gaps,partition,codim,class_pointed,class_unpointed,virtual\n";
  for (const auto& cyc : cycles) {
    Json rec = cycle_record(cyc);
    if (smooth(c)) {
      auto reduced = mumford_reduce(cyc.class_pointed, g);
      rec["class_pointed_smooth"] = poly_to_json(reduced);
      rec["class_pointed_smooth_text"] = to_string(reduced);
    }
    r.payload.push_back(rec);
    csv << (cyc.semigroup ? csv_list(cyc.semigroup->gaps()) : std::string()) << ',' << csv_list(cyc.partition.parts())
        << ',' << cyc.codimension() << ',' << csv_field(to_string(cyc.class_pointed)) << ','
        << csv_field(to_string(cyc.class_unpointed)) << ',' << (cyc.is_virtual ? "true" : "false") << '\n';
    if (cyc.is_virtual)
      r.warnings.push_back("partition " + cyc.partition.str() + " fails the realizability bound; class is virtual");
  }
  r.text = c.format == "csv" ? csv.str() : cycle_table_latex(cycles);
  r.warnings.push_back("classes are normalized formula values; the cycle class agrees up to a nonzero constant");
  if (c.unshifted)
    r.warnings.push_back("unshifted form t_mu(-x/psi): does not reproduce -lambda1 + g(g+1)/2 psi at mu=(1)");
  if (!c.kappa0_substitute) r.warnings.push_back("kappa0 kept symbolic; --kappa0-substitute sets kappa0 = 2g-2");
  return r;
}

Result cmd_pullback(const RunConfig& c, int g) {
  require_format(c, {"json", "latex"});
  if (c.partition.empty()) throw UsageError("pullback needs --partition");
  if (g < 1) throw UsageError("pullback needs genus >= 1");
  auto pb = kstar_schubert(Partition::parse(c.partition), g);
  pb.mode = smooth(c) ? Mode::Smooth : Mode::CM;
  Result r;
  r.payload = pullback_record(pb);
  std::string tex = "k^*\\Omega_{" + pb.partition->str() + "} = " + poly_to_latex(pb.value_lambda);
  if (smooth(c)) {
    auto reduced = mumford_reduce(pb.value_lambda, g);
    r.payload["value_smooth"] = {{"text", to_string(reduced)}, {"terms", poly_to_json(reduced)}};
    tex += " \\equiv " + poly_to_latex(reduced);
    r.warnings.push_back("smooth mode: value_smooth is reduced modulo Mumford's relation c(E)c(E^*) = 1");
  }
  r.text = "$" + tex + "$\n";
  return r;
}

Result cmd_psum(const RunConfig& c, int g) {
  require_format(c, {"json", "latex"});
  if (c.power < 1) throw UsageError("psum needs --power >= 1");
  if (g < 1) throw UsageError("psum needs genus >= 1");
  Result r;
  if (smooth(c)) {
    auto sp = smooth_power_sum(c.power, g, c.paper_sign);
    r.payload = {{"genus", g},
                 {"power", c.power},
                 {"mode", "smooth"},
                 {"value", {{"text", to_string(sp.value)}, {"terms", poly_to_json(sp.value)}}},
                 {"printed", {{"text", to_string(sp.printed)}, {"terms", poly_to_json(sp.printed)}}}};
    r.warnings = sp.notes;
    r.text = "$k^*p_{" + std::to_string(c.power) + "} = " + poly_to_latex(sp.value) + "$\n";
  } else {
    if (c.paper_sign) r.warnings.push_back("--paper-sign only affects smooth mode");
    auto pb = kstar_power_sum(c.power, g, {.chern_character = c.chern_character});
    r.payload = pullback_record(pb);
    r.payload["chern_character"] = c.chern_character;
    r.text = "$k^*p_{" + std::to_string(c.power) + "} = " + poly_to_latex(pb.value_lambda) + "$\n";
  }
  return r;
}

Result cmd_relations(const RunConfig& c, int g) {
  require_format(c, {"json", "csv", "latex"});
  check_degree(c, g);
  Result r;
  r.payload = Json::array();
  std::ostringstream csv, tex;
  csv << "partition,weight,value\n";
  tex << "\\begin{tabular}{lrl}\n$\\mu$ & $|\\mu|$ & $k^*\\Omega_\\mu$ \\\\\n\\hline\n";
  for (const auto& gen : relation_generators(g, c.max_degree)) {
    r.payload.push_back({{"partition", gen.partition.parts()},
                         {"weight", gen.partition.weight()},
                         {"value", {{"text", to_string(gen.value)}, {"terms", poly_to_json(gen.value)}}}});
    csv << csv_list(gen.partition.parts()) << ',' << gen.partition.weight() << ',' << csv_field(to_string(gen.value))
        << '\n';
    tex << gen.partition.str() << " & " << gen.partition.weight() << " & $" << poly_to_latex(gen.value) << "$ \\\\\n";
  }
  tex << "\\end{tabular}\n";
  r.text = c.format == "csv" ? csv.str() : tex.str();
  return r;
}

Result cmd_hilbert(const RunConfig& c, int g) {
  require_format(c, {"json", "csv", "latex"});
  check_degree(c, g);
  auto report = sandwich_report(g, c.max_degree);
  Result r;
  r.payload = hilbert_record(report);
  r.text = c.format == "csv" ? hilbert_csv(report) : hilbert_latex(report);
  r.warnings = report.notes;
  if (smooth(c)) r.warnings.push_back("mode has no effect on hilbert");
  return r;
}

Result cmd_schur_eval(const RunConfig& c) {
  require_format(c, {"json"});
  if (c.partition.empty()) throw UsageError("schur-eval needs --partition");
  auto mu = Partition::parse(c.partition);
  std::vector<MultiPoly> z;
  if (!c.at.empty()) {
    for (const auto& s : split_list(c.at)) z.emplace_back(parse_rational(s));
  } else {
    int n = c.vars > 0 ? c.vars : mu.length();
    z = z_variables(n);
  }
  MultiPoly value;
  if (c.kind == "shifted")
    value = shifted_schur(mu, z);
  else if (c.kind == "factorial")
    value = factorial_schur(mu, z);
  else if (c.kind == "schur")
    value = double_schur(mu, z, ParamSequence::zero());
  else
    throw UsageError("--kind must be shifted, factorial or schur");
  Result r;
  r.payload = {{"partition", mu.parts()},
               {"kind", c.kind},
               {"arguments", static_cast<int>(z.size())},
               {"value", {{"text", to_string(value)}, {"terms", poly_to_json(value)}}}};
  return r;
}

Result run_one(const RunConfig& c, int g) {
  const std::string& cmd = c.command;
  if (cmd == "semigroups") return cmd_semigroups(c, g);
  if (cmd == "class") return cmd_class(c, g);
  if (cmd == "pullback") return cmd_pullback(c, g);
  if (cmd == "psum") return cmd_psum(c, g);
  if (cmd == "relations") return cmd_relations(c, g);
  if (cmd == "hilbert") return cmd_hilbert(c, g);
  return cmd_schur_eval(c);
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json config_echo(const RunConfig& c, int g) {
  Json j = {{"command", c.command},
            {"mode", c.mode},
            {"format", c.format},
            {"unshifted", c.unshifted},
            {"paper_sign", c.paper_sign},
            {"kappa0_substitute", c.kappa0_substitute},
            {"chern_character", c.chern_character}};
  j["genus"] = g >= 0 ? Json(g) : Json(nullptr);
  if (c.max_degree >= 0) j["max_degree"] = c.max_degree;
  if (!c.gaps.empty()) j["gaps"] = c.gaps;
  if (!c.partition.empty()) j["partition"] = c.partition;
  if (c.power) j["power"] = c.power;
  if (!c.at.empty()) j["at"] = c.at;
  if (c.command == "schur-eval") j["kind"] = c.kind;
  return j;
}

std::string render(const RunConfig& c, int g, const Result& r) {
  if (c.format != "json") {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    return r.text;
  }
  Json env = {{"tool", "wtaut"},
              {"version", kVersion},
              {"config", config_echo(c, g)},
              {"timestamp", utc_timestamp()},
              {"payload", r.payload},
              {"warnings", r.warnings}};
  return env.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw DataError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path per_genus_path(const std::string& output, int g) {
  std::filesystem::path p(output);
  auto stem = p.stem().string(), ext = p.extension().string();
  return p.parent_path() / (stem + ".g" + std::to_string(g) + ext);
}

int execute(RunConfig c) {
  bool needs_genus = c.command != "schur-eval";
  resolve_genus(c, needs_genus);
  for (auto* s : {&c.mode, &c.format, &c.kind})
    std::transform(s->begin(), s->end(), s->begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (c.mode != "cm" && c.mode != "smooth") throw UsageError("--mode must be cm or smooth");
  if (c.format != "json" && c.format != "csv" && c.format != "latex")
    throw UsageError("--format must be json, csv or latex");
  if ((c.command == "relations" || c.command == "hilbert") && c.max_degree < 0)
    throw UsageError(c.command + " needs --max-degree");

  if (!needs_genus) {
    std::string out = render(c, -1, run_one(c, -1));
    if (c.output.empty())
      std::cout << out;
    else
      write_atomic(c.output, out);
    return kOk;
  }

  std::vector<std::future<Result>> jobs;
  for (int g = c.genus_lo; g <= c.genus_hi; ++g)
    jobs.push_back(std::async(std::launch::async, [&c, g] { return run_one(c, g); }));
  bool batch = c.genus_hi > c.genus_lo;
  std::string combined;
  for (int g = c.genus_lo; g <= c.genus_hi; ++g) {
    std::string out = render(c, g, jobs[static_cast<std::size_t>(g - c.genus_lo)].get());
    if (c.output.empty())
      combined += out;
    else
      write_atomic(batch ? per_genus_path(c.output, g) : std::filesystem::path(c.output), out);
  }
  std::cout << combined;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Krichever pullbacks, Weierstrass cycles and tautological-ring sandwiches", "wtaut"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; command-line flags win");

  RunConfig c;
  app.add_option("--genus,-g", c.genus, "genus or range a..b");
  app.add_option("--max-degree,--max-weight,-D", c.max_degree, "degree cutoff D");
  app.add_option("--mode", c.mode, "cm or smooth");
  app.add_option("--format,-f", c.format, "json, csv or latex");
  app.add_flag("--unshifted", c.unshifted, "use the unshifted t_mu(-x/psi) cycle formula");
  app.add_flag("--paper-sign", c.paper_sign, "use the printed sign in even smooth power sums");
  app.add_flag("--kappa0-substitute", c.kappa0_substitute, "replace kappa0 by 2g-2");
  app.add_flag("--chern-character", c.chern_character, "divide power sums by s!");
  app.add_option("--output,-o", c.output, "output file; a genus range writes one file per genus");

  auto* sg = app.add_subcommand("semigroups", "numerical semigroups with sequences and partitions");
  auto* cl = app.add_subcommand("class", "Weierstrass or virtual cycle classes");
  cl->add_option("--gaps", c.gaps, "gap list, e.g. 1,3");
  cl->add_option("--partition", c.partition, "partition for a virtual class");
  auto* pb = app.add_subcommand("pullback", "k* of a Schubert class");
  pb->add_option("--partition", c.partition, "partition mu")->required();
  auto* ps = app.add_subcommand("psum", "k* of a power sum");
  ps->add_option("--power,-s", c.power, "power s")->required();
  auto* rel = app.add_subcommand("relations", "relation generators up to a weight");
  auto* hb = app.add_subcommand("hilbert", "Hilbert function sandwich");
  auto* se = app.add_subcommand("schur-eval", "evaluate a shifted, factorial or classical Schur polynomial");
  se->add_option("--partition", c.partition, "partition mu")->required();
  se->add_option("--at", c.at, "comma-separated rational arguments");
  se->add_option("--vars", c.vars, "number of symbolic arguments when --at is absent");
  se->add_option("--kind", c.kind, "shifted, factorial or schur");
  for (auto* sub : {sg, cl, pb, ps, rel, hb, se}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  try {
    return execute(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
