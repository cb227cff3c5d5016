// Command-line front end. Exit codes: 0 success, 1 parse or input error,
// 2 resource limit, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "largeness.hpp"

namespace {

using namespace largeness;
using json_io::Json;

struct Common {
  std::size_t max_index = 8;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t degree = 5;
  bool json = false;
  std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-index", c.max_index, "largest subgroup index searched")->check(CLI::PositiveNumber);
  cmd->add_option("--max-cosets", c.max_cosets, "limit on cosets defined by enumeration or low-index search")->check(CLI::PositiveNumber);
  cmd->add_option("--degree", c.degree, "largest permutation degree for finite images")->check(CLI::Range(0, 8));
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--seed", c.seed, "random seed");
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string& source) {
  if (source == "-") return slurp(std::cin);
  std::ifstream f(source);
  if (!f) throw DomainError("cannot open '" + source + "'");
  return slurp(f);
}

/// A literal presentation, a file, or '-' for standard input. Lines whose
/// first non-blank character is '#' are comments.
Presentation load_presentation(const std::string& source) {
  const std::string text = source.find('<') != std::string::npos ? source : read_source(source);
  std::istringstream lines(text);
  std::string line, kept;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    kept += line + "\n";
  }
  return parse_presentation(kept);
}

void emit(const Common& c, const Json& j, const std::string& human) {
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

std::string describe(const Verdict& v, const Presentation& p) {
  std::ostringstream out;
  out << "status: " << to_string(v.status) << "\n";
  if (v.certificate) {
    out << "certificate: " << certificate_kind(*v.certificate) << "\n";
    if (const auto* a = std::get_if<AlexanderVanishes>(&*v.certificate)) {
      out << "  chi:";
      for (Exp x : a->chi.values) out << " " << x;
      out << "\n  subgroup chain:";
      for (const CosetTable& t : a->chain) out << " index " << t.index();
      if (a->chain.empty()) out << " (whole group)";
      out << "\n  " << (a->prime ? "vanishes mod " + a->prime->str() : std::string("vanishes over Z")) << "\n";
    } else if (const auto* h = std::get_if<HeightOneBigAbelianization>(&*v.certificate)) {
      out << "  subgroup index " << h->subgroup.index() << ", abelianization " << h->invariants.to_string() << "\n";
    } else {
      out << "  deficiency " << deficiency(p) << "\n";
    }
  }
  for (const SubgroupScan& s : v.evidence.scans) out << "scan: index " << s.index << " " << s.invariants.to_string() << "\n";
  for (const FiniteImage& f : v.evidence.finite_images) {
    out << "image: degree " << f.degree << " order " << f.order << (f.abelian ? " abelian" : "")
        << (f.metacyclic ? " metacyclic" : "") << "\n";
  }
  for (const std::string& o : v.evidence.observations) out << "note: " << o << "\n";
  return out.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::string> basis_for(const std::string& given, std::size_t n) {
  if (!given.empty()) {
    auto names = split_names(given);
    if (names.size() != n) throw DomainError("basis has " + std::to_string(names.size()) + " names for " +
                                             std::to_string(n) + " images");
    return names;
  }
  if (n <= 3) {
    const std::vector<std::string> xyz = {"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  return default_basis_names(static_cast<int>(n));
}

FreeEndomorphism endomorphism_from(const std::vector<std::string>& images, const std::string& basis) {
  const auto names = basis_for(basis, images.size());
  std::vector<Word> w;
  for (const auto& s : images) w.push_back(parse_word(s, names));
  return FreeEndomorphism(names, std::move(w));
}

Exp to_exp(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("not an integer: '" + s + "'", used);
    return static_cast<Exp>(v);
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: '" + s + "'", 0);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Largeness certificates for finitely presented groups"};
  app.require_subcommand(1);
  Common common;
  std::string input, cert_path, chi_text, family, basis, copy, stable = "t";
  std::vector<std::string> params;
  int census_k = 1;
  Exp census_bound = 4;
  std::size_t census_samples = 100;
  std::string prime_text;

  auto* analyze_cmd = app.add_subcommand("analyze", "certify largeness or report what was searched");
  analyze_cmd->add_option("input", input, "presentation, file, or -")->required();
  auto* census_cmd = app.add_subcommand("census", "height-1 statistics over random exponent vectors");
  census_cmd->add_option("--k", census_k, "number of t a^i t^-1 a^j blocks")->check(CLI::PositiveNumber);
  census_cmd->add_option("--bound", census_bound, "exponents drawn from [-bound, bound] minus 0")->check(CLI::PositiveNumber);
  census_cmd->add_option("--samples", census_samples, "sample count");
  auto* construct_cmd = app.add_subcommand("construct", "print a member of a named family");
  construct_cmd->add_option("family", family, "bs | cmn | higman | hnn-iterate | mapping-torus | double")->required();
  construct_cmd->add_option("params", params, "family parameters");
  construct_cmd->add_option("--basis", basis, "comma-separated free basis names (mapping-torus, double)");
  construct_cmd->add_option("--copy", copy, "comma-separated names for the second copy (double)");
  construct_cmd->add_option("--stable", stable, "stable letter name (hnn-iterate)");
  auto* verify_cmd = app.add_subcommand("verify", "replay a certificate");
  verify_cmd->add_option("input", input, "presentation, file, or -")->required();
  verify_cmd->add_option("certificate", cert_path, "JSON verdict or certificate file")->required();
  auto* lowindex_cmd = app.add_subcommand("lowindex", "subgroups up to --max-index and their abelianizations");
  lowindex_cmd->add_option("input", input, "presentation, file, or -")->required();
  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomial for a homomorphism onto Z");
  alex_cmd->add_option("input", input, "presentation, file, or -")->required();
  alex_cmd->add_option("--chi", chi_text, "comma-separated values on the generators");
  alex_cmd->add_option("--prime", prime_text, "also reduce modulo this prime");
  auto* abelian_cmd = app.add_subcommand("abelian", "abelianization invariants");
  abelian_cmd->add_option("input", input, "presentation, file, or -")->required();
  auto* height_cmd = app.add_subcommand("height", "Moldavanskii rewriting of a 2-generator 1-relator presentation");
  height_cmd->add_option("input", input, "presentation, file, or -")->required();
  for (CLI::App* c : app.get_subcommands([](CLI::App*) { return true; })) add_common(c, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*analyze_cmd) {
    const Presentation p = load_presentation(input);
    AnalyzeOptions opt;
    opt.max_index = common.max_index;
    opt.max_perm_degree = common.degree;
    const Verdict v = analyze(p, opt);
    if (v.certificate && !check_certificate(p, *v.certificate, {common.max_cosets}))
      throw InternalError("analyze produced a certificate that does not replay");
    Json j = json_io::to_json(v, common.seed);
    j["input"] = format_presentation(p);
    emit(common, j, describe(v, p));
    return 0;
  }
  if (*census_cmd) {
    CensusOptions opt;
    opt.k = census_k;
    opt.bound = census_bound;
    opt.samples = census_samples;
    opt.seed = common.seed;
    opt.budget = {common.max_index, common.degree};
    const CensusReport r = run_census(opt);
    std::ostringstream out;
    out << "samples: " << r.samples.size() << " (k " << opt.k << ", bound " << opt.bound << ", seed " << opt.seed << ")\n"
        << "certified: " << r.certified << "\nunknown: " << r.unknown << "\n";
    for (const auto& [kind, n] : r.histogram) out << "  " << kind << ": " << n << "\n";
    emit(common, json_io::to_json(r), out.str());
    return 0;
  }
  if (*construct_cmd) {
    auto need = [&](std::size_t n) {
      if (params.size() != n)
        throw DomainError("construct " + family + ": expected " + std::to_string(n) + " parameters, got " +
                          std::to_string(params.size()));
    };
    Presentation p;
    if (family == "bs") {
      need(2);
      p = baumslag_solitar(to_exp(params[0]), to_exp(params[1]));
    } else if (family == "cmn") {
      need(2);
      p = cmn(to_exp(params[0]), to_exp(params[1]));
    } else if (family == "higman") {
      // w v k m n over generators a, t
      need(5);
      const std::vector<std::string> at = {"a", "t"};
      p = Presentation(at, {higman_relator(parse_word(params[0], at), parse_word(params[1], at), to_exp(params[2]),
                                           to_exp(params[3]), to_exp(params[4]))});
    } else if (family == "hnn-iterate") {
      need(2);
      const Presentation base = load_presentation(params[0]);
      const Gen t = base.index_of(stable);
      p = hnn_iterate(base, 1 - t, t, static_cast<int>(to_exp(params[1])));
    } else if (family == "mapping-torus") {
      if (params.empty()) throw DomainError("construct mapping-torus: no images given");
      p = mapping_torus(endomorphism_from(params, basis));
    } else if (family == "double") {
      if (params.empty()) throw DomainError("construct double: no images given");
      p = mapping_torus(double_map(endomorphism_from(params, basis), split_names(copy)));
    } else {
      throw DomainError("unknown family '" + family + "'");
    }
    emit(common, Json{{"presentation", format_presentation(p)}, {"versions", json_io::versions()}},
         format_presentation(p) + "\n");
    return 0;
  }
  if (*verify_cmd) {
    const Presentation p = load_presentation(input);
    Json j;
    try {
      j = Json::parse(read_source(cert_path));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("certificate JSON: ") + e.what(), e.byte);
    }
    const CheckResult r = check_certificate(p, json_io::certificate_from_json(j), {common.max_cosets});
    emit(common, Json{{"valid", r.ok}, {"reason", r.reason}, {"versions", json_io::versions()}},
         std::string(r.ok ? "valid: " : "invalid: ") + r.reason + "\n");
    return r.ok ? 0 : 1;
  }
  if (*lowindex_cmd) {
    const Presentation p = load_presentation(input);
    Json list = Json::array();
    std::ostringstream out;
    for (const CosetTable& t : low_index_subgroups(p, common.max_index, common.max_cosets)) {
      const AbelianInvariants inv = abelian_invariants(rs_presentation(p, t));
      list.push_back({{"table", json_io::to_json(t)}, {"abelian_invariants", json_io::to_json(inv)}});
      out << "index " << t.index() << ": " << inv.to_string() << "\n";
    }
    emit(common, Json{{"max_index", common.max_index}, {"subgroups", list}, {"versions", json_io::versions()}},
         out.str());
    return 0;
  }
  if (*alex_cmd) {
    const Presentation p = load_presentation(input);
    Chi chi;
    if (!chi_text.empty()) {
      for (const auto& s : split_names(chi_text)) chi.values.push_back(to_exp(s));
    } else {
      const auto cands = chi_candidates(p, 1);
      if (hom_to_z_basis(p).size() != 1)
        throw DomainError("first Betti number is not 1; pass --chi");
      chi = cands.front();
    }
    const LaurentPoly delta = alexander_polynomial(p, chi);
    Json j{{"chi", json_io::to_json(chi)},
           {"alexander_polynomial", delta.to_string()},
           {"coefficients", Json::array()},
           {"low_degree", delta.low()},
           {"content", json_io::to_json(delta.content())},
           {"versions", json_io::versions()}};
    for (const Integer& c : delta.coefficients()) j["coefficients"].push_back(json_io::to_json(c));
    std::string human = "alexander polynomial: " + delta.to_string() + "\n";
    if (!prime_text.empty()) {
      const Integer q(prime_text);
      if (q < 2 || smallest_prime_factor(q) != q) throw DomainError("--prime " + prime_text + " is not prime");
      const LaurentPoly red = delta.reduce_mod(q);
      j["modular"] = {{"prime", json_io::to_json(q)}, {"polynomial", red.to_string()}};
      human += "mod " + q.str() + ": " + red.to_string() + "\n";
    }
    emit(common, j, human);
    return 0;
  }
  if (*abelian_cmd) {
    const Presentation p = load_presentation(input);
    const AbelianInvariants inv = abelian_invariants(p);
    emit(common, Json{{"abelian_invariants", json_io::to_json(inv)}, {"versions", json_io::versions()}},
         inv.to_string() + "\n");
    return 0;
  }
  if (*height_cmd) {
    const Presentation p = load_presentation(input);
    const auto cands = zero_exponent_basis(p);
    Json forms = Json::array();
    std::ostringstream out;
    for (const ZeroSumCandidate& c : cands) {
      const HeightData h = moldavanskii_rewrite(c.presentation.relators().front(), c.a, c.t);
      Json runs = Json::array();
      for (const SubscriptedRun& r : h.rewritten) runs.push_back({r.subscript, r.exp});
      Json f{{"presentation", format_presentation(c.presentation)},
             {"a", c.presentation.name(c.a)},
             {"t", c.presentation.name(c.t)},
             {"chi", json_io::to_json(c.chi)},
             {"rewritten", runs},
             {"height", h.height},
             {"exponents", h.exponents},
             {"alexander_polynomial", nullptr}};
      out << format_presentation(c.presentation) << " (a = " << c.presentation.name(c.a)
          << ", t = " << c.presentation.name(c.t) << "): height " << h.height;
      if (h.height == 1) {
        const LaurentPoly d = height1_alexander(h);
        f["alexander_polynomial"] = d.to_string();
        out << ", exponents";
        for (Exp e : h.exponents) out << " " << e;
        out << ", alexander polynomial " << d.to_string();
      }
      out << "\n";
      forms.push_back(std::move(f));
    }
    emit(common, Json{{"forms", forms}, {"versions", json_io::versions()}}, out.str());
    return 0;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
