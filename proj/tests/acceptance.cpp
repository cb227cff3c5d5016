// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "largeness.hpp"
#include "test_support.hpp"

using namespace largeness;
using json_io::Json;

namespace {

/// Collects failed checks and the JSON produced along the way.
struct Outcome {
  std::vector<std::string> failures;
  Json out = Json::object();

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

LaurentPoly linear(const Integer& c, const Integer& d) { return LaurentPoly(0, {d, c}).canonical(); }

const Chi kT{{0, 1}};

/// Closed form for t a^i1 t^-1 a^i2 ...: odd-position sum times t plus the even-position sum.
LaurentPoly closed_form(const std::vector<Exp>& v) {
  Integer c = 0, d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) (i % 2 == 0 ? c : d) += v[i];
  return linear(c, d);
}

std::vector<Exp> random_exponents(std::mt19937_64& rng, int k_max, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound), len(1, k_max);
  std::vector<Exp> v(static_cast<std::size_t>(2 * len(rng)));
  for (auto& x : v) {
    do x = e(rng); while (x == 0);
  }
  return v;
}

Presentation g0_two_generator() {
  Presentation p = parse_presentation("<t,x,y,z | t x t^-1 = y, t y t^-1 = z, t z t^-1 = x y>");
  for (const char* g : {"y", "z"}) p = eliminate_generator(p, p.index_of(g));
  return p;
}

bool cyclically_equivalent(const Word& u, const Word& v) {
  for (Exp k = 0; k < static_cast<Exp>(u.length()); ++k) {
    if (rotate(u, k) == v) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

void alexander_polynomials(Outcome& r) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [m, n] : std::vector<std::pair<Exp, Exp>>{{1, 2}, {2, 3}, {2, 4}, {6, 9}}) {
    const LaurentPoly d = alexander_polynomial(baumslag_solitar(m, n), kT);
    const std::string tag = "BS(" + std::to_string(m) + "," + std::to_string(n) + ")";
    r.check(d == linear(m, -n), tag + " gives " + d.to_string());
    r.check(d == closed_form({m, -n}), tag + " differs from the closed form");
    r.out[tag] = d.to_string();
  }
  const Presentation tm2 = parse_presentation("<a,t | t a^2 t^-1 a^-1 t a^-1 t^-1 a^-1>");
  const LaurentPoly d = alexander_polynomial(tm2, kT);
  r.check(d.to_string() == "t - 2", "t-2 group gives " + d.to_string());
  r.check(d == closed_form({2, -1, -1, -1}), "t-2 group differs from the closed form");
  r.out["t-2 group"] = d.to_string();
  r.check(seconds_since(start) < 1.0, "runtime above 1 s");
}

void largeness_certificates(Outcome& r) {
  auto timed = [&](const Presentation& p, const std::string& tag) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = analyze(p);
    r.check(seconds_since(start) < 1.0, tag + ": runtime above 1 s");
    r.out[tag] = json_io::to_json(v, 0);
    return v;
  };
  const Presentation bs24 = baumslag_solitar(2, 4);
  const Verdict v1 = timed(bs24, "BS(2,4)");
  const auto* a1 = v1.certificate ? std::get_if<AlexanderVanishes>(&*v1.certificate) : nullptr;
  r.check(a1 && a1->prime == Integer(2), "BS(2,4) not certified mod 2");
  r.check(v1.certificate && check_certificate(bs24, *v1.certificate).ok, "BS(2,4) certificate does not replay");

  const Presentation f2z = parse_presentation("<a,b,t | [t,a], [t,b]>");
  const auto start = std::chrono::steady_clock::now();
  const HowieResult h = howie_large_test(f2z, Chi{{1, 0, 0}});
  r.check(seconds_since(start) < 1.0, "F2 x Z: runtime above 1 s");
  r.check(h.large && h.delta.is_zero() && !h.prime, "F2 x Z with chi(a) = 1 not certified by a zero polynomial");
  const AlexanderVanishes cert{{}, Chi{{1, 0, 0}}, std::nullopt};
  r.check(check_certificate(f2z, cert).ok, "F2 x Z certificate does not replay");
  r.out["F2 x Z"] = json_io::to_json(Certificate(cert));

  const Verdict v3 = timed(baumslag_solitar(2, 3), "BS(2,3)");
  r.check(v3.status == Status::Unknown, "BS(2,3) not Unknown");
}

void index_fourteen_subgroup(Outcome& r) {
  const auto start = std::chrono::steady_clock::now();
  const Presentation g0 = parse_presentation("<t,x,y,z | t x t^-1 = y, t y t^-1 = z, t z t^-1 = x y>");
  std::vector<Word> gens;
  for (const char* s : {"x", "y", "z^2", "z x z^-1", "z y z^-1", "z t^-7"}) gens.push_back(parse_word(s, g0.names()));
  const CosetTable h = todd_coxeter(g0, gens);
  const AbelianInvariants inv = abelian_invariants(rs_presentation(g0, h));
  const AbelianInvariants want{2, {2, 4}};
  r.check(h.index() == 14, "index " + std::to_string(h.index()));
  r.check(inv == want, "invariants " + inv.to_string());
  r.check(seconds_since(start) < 10.0, "runtime above 10 s");
  r.out["index"] = h.index();
  r.out["invariants"] = json_io::to_json(inv);

  // full low-index search on the 2-generator form
  const Presentation two = g0_two_generator();
  std::size_t classes = 0, hits = 0;
  for_each_low_index_subgroup(two, {14, 0}, [&](CosetTable t) {
    ++classes;
    if (t.index() == 14 && abelian_invariants(rs_presentation(two, t)) == want) ++hits;
  });
  r.check(hits > 0, "low-index search to 14 found no class with invariants " + want.to_string());
  r.out["low_index_classes"] = classes;
  r.out["low_index_hits"] = hits;
}

void height_one_driver(Outcome& r) {
  const auto start = std::chrono::steady_clock::now();
  const Presentation tm2 = height_one_presentation({2, -1, -1, -1});
  const Verdict v = height1_largeness_driver(tm2, {8, 5});
  const auto* big = v.certificate ? std::get_if<HeightOneBigAbelianization>(&*v.certificate) : nullptr;
  r.check(v.status == Status::LargeCertified && big, "t-2 group not certified by a big abelianization");
  if (big) {
    r.check(big->subgroup.index() == 3, "witness index " + std::to_string(big->subgroup.index()));
    r.check(big->invariants.to_string() == "Z^1 x Z/2 x Z/2", "witness invariants " + big->invariants.to_string());
    r.check(big->invariants.min_generators() >= 3, "witness needs fewer than 3 generators");
    r.check(check_certificate(tm2, *v.certificate).ok, "witness does not replay");
  }
  r.out["t-2 group"] = json_io::to_json(v, 0);

  const Verdict u = height1_largeness_driver(cmn(1, 2), {8, 5});
  r.check(u.status == Status::Unknown, "C(1,2) not Unknown");
  r.check(!u.evidence.scans.empty(), "C(1,2) has no subgroup scans");
  for (const SubgroupScan& s : u.evidence.scans) r.check(s.invariants.rank == 1, "C(1,2) scan of rank != 1");
  r.check(!u.evidence.finite_images.empty(), "C(1,2) has no finite images");
  for (const FiniteImage& f : u.evidence.finite_images) r.check(f.metacyclic, "C(1,2) image not metacyclic");
  r.out["C(1,2)"] = json_io::to_json(u, 0);
  r.check(seconds_since(start) < 300.0, "runtime above 5 min");
}

void hnn_law(Outcome& r) {
  std::mt19937_64 rng(2024);
  Json rows = Json::array();
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<Exp> v = random_exponents(rng, 2, 3);
    const Presentation p = height_one_presentation(v);
    const LaurentPoly d = alexander_polynomial(p, kT);
    // c and d read off Delta(P) = c t + d
    const LaurentPoly raw = closed_form(v);
    r.check(d == raw, "Fox and closed form differ");
    const Integer sum = raw.eval_at_one();
    const LaurentPoly hnn = alexander_polynomial(hnn_conjugate_extension(p, 0, 1), kT);
    r.check(hnn == LaurentPoly::constant(sum).canonical(), "HNN law fails for " + format_presentation(p));
    rows.push_back({{"exponents", v}, {"delta", d.to_string()}, {"hnn_delta", hnn.to_string()}});
  }
  r.out["random"] = rows;
  const Presentation iterated = hnn_conjugate_extension(height_one_presentation({2, -1, -1, -1}), 0, 1);
  const LaurentPoly one = alexander_polynomial(iterated, kT);
  r.check(one == LaurentPoly::constant(1), "iterated example gives " + one.to_string());
  r.out["iterated"] = one.to_string();
}

void proabelian_evidence(Outcome& r) {
  const Presentation p = parse_presentation("<a,t | [a,t] [t,a^-1] [a,t]^-1 = [t,a^-1]^2>");
  const AbelianInvariants zz{2, {}};
  r.check(abelian_invariants(p) == zz, "group invariants " + abelian_invariants(p).to_string());
  Json scans = Json::array();
  const auto subs = low_index_subgroups(p, 6);
  for (const CosetTable& t : subs) {
    const AbelianInvariants inv = abelian_invariants(rs_presentation(p, t));
    r.check(inv == zz, "index " + std::to_string(t.index()) + " subgroup has " + inv.to_string());
    scans.push_back({{"index", t.index()}, {"abelian_invariants", json_io::to_json(inv)}});
  }
  r.check(subs.size() > 1, "no proper subgroups found");
  const auto images = finite_image_scan(p, 5);
  for (const FiniteImage& f : images) r.check(f.abelian, "nonabelian image of order " + std::to_string(f.order));
  r.out["proabelian_scans"] = scans;
  r.out["proabelian_images"] = images.size();

  const Presentation c23 = cmn(2, 3);
  Json cscans = Json::array();
  const auto csubs = low_index_subgroups(c23, 6);
  for (const CosetTable& t : csubs) {
    const AbelianInvariants inv = abelian_invariants(rs_presentation(c23, t));
    r.check(inv == AbelianInvariants{1, {}}, "C(2,3) index " + std::to_string(t.index()) + " has " + inv.to_string());
    cscans.push_back({{"index", t.index()}, {"abelian_invariants", json_io::to_json(inv)}});
  }
  r.out["C(2,3)_scans"] = cscans;
}

void free_by_cyclic(Outcome& r) {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  const FreeEndomorphism alpha(xyz, {parse_word("y", xyz), parse_word("z", xyz), parse_word("x y", xyz)});
  const FreeEndomorphism d = double_map(alpha, {"a", "b", "c"});
  const Presentation torus = mapping_torus(d);
  const Presentation expected = parse_presentation(
      "<t,x,y,z,a,b,c | t x t^-1 = y, t y t^-1 = z, t z t^-1 = x y, t a t^-1 = b, t b t^-1 = c, t c t^-1 = a b>");
  r.check(torus == expected, "doubled mapping torus is " + format_presentation(torus));
  r.out["torus"] = format_presentation(torus);

  // beta squares to the doubled map; its torus collapses to two generators
  const std::vector<std::string> six = {"a", "b", "c", "x", "y", "z"};
  std::vector<Word> imgs;
  for (const char* s : {"x", "y", "z", "b", "c", "a b"}) imgs.push_back(parse_word(s, six));
  const FreeEndomorphism beta(six, imgs);
  r.check(beta * beta == double_map(FreeEndomorphism(
                             {"a", "b", "c"}, {parse_word("b", {"a", "b", "c"}), parse_word("c", {"a", "b", "c"}),
                                               parse_word("a b", {"a", "b", "c"})}),
                                         {"x", "y", "z"}),
          "beta does not square to the doubled map");
  Presentation p = mapping_torus(beta);
  for (const char* g : {"x", "b", "y", "c", "z"}) p = eliminate_generator(p, p.index_of(g));
  const Word target = parse_word("t^6 a t^-4 a^-1 t^-2 a^-1", p.names());
  r.check(p.relator_count() == 1 && (cyclically_equivalent(p.relators()[0], target) ||
                                     cyclically_equivalent(p.relators()[0], target.inverse())),
          "elimination reached " + format_presentation(p));
  r.out["two_generator"] = format_presentation(p);

  const IntPoly cp = characteristic_polynomial(alpha);
  r.check(format_poly(cp) == "t^3 - t - 1", "characteristic polynomial " + format_poly(cp));
  r.check(is_pv_polynomial(cp), "t^3 - t - 1 rejected");
  r.check(!is_pv_polynomial(IntPoly(std::vector<Integer>{-1, 0, 1})), "t^2 - 1 accepted");
  r.out["char_poly"] = format_poly(cp);

  // certifier on the doubled map, witness from the index-14 subgroup
  const Presentation g0 = mapping_torus(alpha);
  std::vector<Word> hg;
  for (const char* s : {"x", "y", "z^2", "z x z^-1", "z y z^-1", "z t^-7"}) hg.push_back(parse_word(s, g0.names()));
  const CosetTable witness = todd_coxeter(g0, hg);
  const Verdict v = certify_reducible_largeness(double_map(alpha), 3, witness, witness);
  const bool av = v.certificate && std::holds_alternative<AlexanderVanishes>(*v.certificate);
  r.check(av, "certifier returned no Alexander certificate");
  r.check(av && check_certificate(mapping_torus(double_map(alpha)), *v.certificate).ok,
          "certifier output does not replay");
  r.out["certifier"] = json_io::to_json(v, 0);
}

void property_suites(Outcome& r) {
  std::mt19937_64 rng(8);
  std::size_t counts[7] = {};

  std::uniform_int_distribution<int> cv(-2, 2);
  for (int i = 0; i < 500; ++i) {
    const Chi chi{{cv(rng), cv(rng), cv(rng)}};
    const Word u = support::random_word(rng, 3, 12), v = support::random_word(rng, 3, 12);
    const LaurentPoly tu = LaurentPoly::monomial(1, static_cast<long>(chi(u)));
    LaurentPoly sum;
    for (Gen g = 0; g < 3; ++g) {
      r.check(fox_derivative_eval(u * v, g, chi) == fox_derivative_eval(u, g, chi) + tu * fox_derivative_eval(v, g, chi),
              "Fox product rule");
      sum += fox_derivative_eval(u, g, chi) *
             (LaurentPoly::monomial(1, static_cast<long>(chi.values[static_cast<std::size_t>(g)])) -
              LaurentPoly::constant(1));
    }
    r.check(sum == tu - LaurentPoly::constant(1), "Fox fundamental identity");
    ++counts[0];
  }

  for (int i = 0; i < 200; ++i) {
    const std::vector<Exp> v = random_exponents(rng, 3, 4);
    const Presentation p = height_one_presentation(v);
    r.check(alexander_polynomial(p, kT) == closed_form(v), "closed form differs from Fox");
    const auto form = height_one_form(p);
    r.check(form && height1_alexander(form->second) == closed_form(v), "library closed form differs");
    ++counts[1];
  }

  std::uniform_int_distribution<int> e(-9, 9);
  for (int i = 0; i < 200; ++i) {
    IntMatrix m(1 + rng() % 6, 1 + rng() % 6);
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m(a, b) = e(rng);
    const SmithForm s = smith_normal_form(m);
    r.check(s.u * m * s.v == s.d, "U M V != D");
    r.check(iabs(determinant(s.u)) == 1 && iabs(determinant(s.v)) == 1, "transform not unimodular");
    ++counts[2];
  }

  while (counts[3] < 50) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> rels;
    for (int k = 0; k < n - 1; ++k) rels.push_back(support::random_word(rng, n, 3 + static_cast<int>(rng() % 6)));
    const Presentation p(default_basis_names(n), rels);
    if (deficiency(p) != 1) continue;
    for (const CosetTable& t : low_index_subgroups(p, 3))
      r.check(deficiency(rs_presentation(p, t)) == 1, "RS changed deficiency for " + format_presentation(p));
    ++counts[3];
  }

  for (int i = 0; i < 400 && counts[4] < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> rels;
    for (int k = 0; k < n - 1; ++k) rels.push_back(support::random_word(rng, n, 4 + static_cast<int>(rng() % 6)));
    const Presentation p(default_basis_names(n), rels);
    if (deficiency(p) != 1) continue;
    const AbelianInvariants inv = abelian_invariants(p);
    if (inv.rank != 1) continue;
    const auto basis = hom_to_z_basis(p);
    Chi chi;
    for (const Integer& x : basis[0]) chi.values.push_back(static_cast<Exp>(x));
    r.check(iabs(alexander_polynomial(p, chi).eval_at_one()) == inv.torsion_order(),
            "|Delta(1)| differs from the torsion order for " + format_presentation(p));
    ++counts[4];
  }
  r.check(counts[4] >= 30, "too few beta_1 = 1 samples");

  for (int i = 0; i < 200; ++i) {
    const Word w = cyclic_reduce(support::random_zero_sum_word(rng, 2, 1, 4 + i % 12)).core;
    if (!w.involves(0)) continue;
    const auto h = moldavanskii_rewrite(w, 0, 1).rewritten;
    for (Exp k = 0; k < static_cast<Exp>(w.length()); ++k)
      r.check(moldavanskii_rewrite(rotate(w, k), 0, 1).rewritten == h, "rewrite changed under rotation");
    r.check(moldavanskii_rewrite(w.inverse(), 0, 1).rewritten == h, "rewrite changed under inversion");
    ++counts[5];
  }

  // element orders in S4 divide 12 and in S5 divide 60, so these bounds cover every case
  r.check(!verify_order_lemma({{1, 2, 3, 0}, {1, 0, 2, 3}}, 4, 12, 12), "S4 counterexample");
  r.check(!verify_order_lemma({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 5, 60, 60), "S5 counterexample");
  counts[6] = 2;

  r.out["counts"] = std::vector<std::size_t>(std::begin(counts), std::end(counts));
}

struct Criterion {
  int number;
  const char* name;
  std::function<void(Outcome&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "alexander polynomials", alexander_polynomials},
      {2, "largeness certificates", largeness_certificates},
      {3, "index 14 subgroup", index_fourteen_subgroup},
      {4, "height-1 driver", height_one_driver},
      {5, "hnn transform law", hnn_law},
      {6, "proabelian evidence", proabelian_evidence},
      {7, "free-by-cyclic pipeline", free_by_cyclic},
      {8, "property suites", property_suites},
  };
  return all;
}

Json census_json() {
  CensusOptions opt;
  opt.k = 1;
  opt.bound = 4;
  opt.samples = 50;
  opt.seed = 7;
  return json_io::to_json(run_census(opt));
}

void report(int number, const char* name, const Outcome& r, double secs) {
  std::printf("criterion %d (%s): %s (%.2f s)\n", number, name, r.failures.empty() ? "PASS" : "FAIL", secs);
  for (const std::string& f : r.failures) std::printf("    %s\n", f.c_str());
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  bool all = true;
  std::vector<std::string> first;
  for (const Criterion& c : criteria()) {
    Outcome r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    report(c.number, c.name, r, seconds_since(start));
    all = all && r.failures.empty();
    first.push_back(r.out.dump());
  }

  Outcome det;
  const auto start = std::chrono::steady_clock::now();
  try {
    for (std::size_t i = 0; i < criteria().size(); ++i) {
      Outcome again;
      criteria()[i].body(again);
      det.check(again.out.dump() == first[i], "criterion " + std::to_string(criteria()[i].number) + " output differs");
    }
    det.check(census_json().dump() == census_json().dump(), "census output differs");
  } catch (const std::exception& e) {
    det.failures.push_back(std::string("exception: ") + e.what());
  }
  report(9, "determinism", det, seconds_since(start));
  all = all && det.failures.empty();
  return all ? 0 : 1;
}
