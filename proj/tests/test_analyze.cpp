#include <gtest/gtest.h>

#include <numeric>

#include "largeness.hpp"

using namespace largeness;

namespace {

Presentation P(const char* s) { return parse_presentation(s); }

bool replays(const Presentation& p, const Verdict& v) {
  return v.certificate && check_certificate(p, *v.certificate).ok;
}

}  // namespace

TEST(ChiCandidates, PrimitiveAndValid) {
  const Presentation f2z = P("<a,b,t | [t,a], [t,b]>");
  const auto cands = chi_candidates(f2z, 200);
  // primitive vectors in [-2,2]^3 modulo sign
  EXPECT_EQ(cands.size(), 49u);
  for (const Chi& c : cands) {
    EXPECT_TRUE(vanishes_on_relators(f2z, c));
    EXPECT_TRUE(c.is_surjective());
  }
  EXPECT_EQ(chi_candidates(f2z, 5).size(), 5u);
  EXPECT_TRUE(chi_candidates(P("<a | a^3>"), 200).empty());
  EXPECT_EQ(chi_candidates(P("<a,t | t a t^-1 a^-2>"), 200), (std::vector<Chi>{Chi{{0, 1}}}));
}

TEST(Analyze, Dispatch) {
  const Presentation free2 = P("<a,b | >");
  const Verdict vf = analyze(free2);
  ASSERT_EQ(vf.status, Status::LargeCertified);
  EXPECT_TRUE(std::holds_alternative<DeficiencyAtLeastTwo>(*vf.certificate));
  EXPECT_TRUE(replays(free2, vf));

  const Presentation bs24 = baumslag_solitar(2, 4);
  const Verdict vb = analyze(bs24);
  ASSERT_EQ(vb.status, Status::LargeCertified);
  EXPECT_EQ(std::get<AlexanderVanishes>(*vb.certificate).prime, Integer(2));
  EXPECT_TRUE(replays(bs24, vb));

  const Presentation torus = P("<a,t | [t,a]>");
  const Verdict vt = analyze(torus);
  EXPECT_EQ(vt.status, Status::Unknown);
  EXPECT_FALSE(vt.certificate);
  ASSERT_FALSE(vt.evidence.scans.empty());
  for (const SubgroupScan& s : vt.evidence.scans) EXPECT_EQ(s.invariants, (AbelianInvariants{2, {}}));
  EXPECT_NE(std::find(vt.evidence.observations.begin(), vt.evidence.observations.end(), "alexander polynomial t - 1"),
            vt.evidence.observations.end());

  const Presentation f2z = P("<a,b,t | [t,a], [t,b]>");
  const Verdict vz = analyze(f2z);
  ASSERT_EQ(vz.status, Status::LargeCertified);
  EXPECT_FALSE(std::get<AlexanderVanishes>(*vz.certificate).prime);
  EXPECT_TRUE(replays(f2z, vz));
}

TEST(Analyze, GenericPathThroughSubgroups) {
  // mapping torus of the doubled automorphism: the whole-group polynomial
  // is the square of t^3 - t - 1, so certification needs a subgroup
  const Presentation g = parse_presentation(
      "<t,a,b,c,x,y,z | t a t^-1 = b, t b t^-1 = c, t c t^-1 = a b, t x t^-1 = y, t y t^-1 = z, t z t^-1 = x y>");
  const Verdict v = analyze(g);
  ASSERT_EQ(v.status, Status::LargeCertified);
  const auto& av = std::get<AlexanderVanishes>(*v.certificate);
  EXPECT_EQ(av.chain.size(), 1u);
  EXPECT_TRUE(replays(g, v));
}

TEST(Analyze, FiniteGroupIsUnknown) {
  const Presentation s3 = P("<a,b | a^2, b^3, (a b)^2>");
  const Verdict v = analyze(s3);
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_FALSE(v.evidence.finite_images.empty());
}

TEST(Census, ContentRuleAndDeterminism) {
  CensusOptions opt;
  opt.k = 1;
  opt.bound = 4;
  opt.samples = 60;
  opt.seed = 11;
  const CensusReport a = run_census(opt), b = run_census(opt);
  EXPECT_EQ(json_io::to_json(a).dump(), json_io::to_json(b).dump());
  EXPECT_EQ(a.certified + a.unknown, 60u);
  for (const CensusSample& s : a.samples) {
    ASSERT_EQ(s.exponents.size(), 2u);
    for (Exp e : s.exponents) {
      EXPECT_NE(e, 0);
      EXPECT_LE(std::abs(e), 4);
    }
    if (std::gcd(s.exponents[0], s.exponents[1]) > 1) EXPECT_EQ(s.status, Status::LargeCertified);
  }
  opt.samples = 0;
  const CensusReport empty = run_census(opt);
  EXPECT_TRUE(empty.samples.empty());
  EXPECT_TRUE(empty.histogram.empty());
  opt.seed = 12;
  opt.samples = 60;
  EXPECT_NE(json_io::to_json(run_census(opt)).dump(), json_io::to_json(a).dump());
}

TEST(Json, CertificateRoundTrip) {
  for (const Presentation& p : {baumslag_solitar(2, 4), parse_presentation("<a,t | t a^2 t^-1 a^-1 t a^-1 t^-1 a^-1>"),
                                parse_presentation("<a,b,c | [a,b]>"), parse_presentation("<a,b,t | [t,a], [t,b]>")}) {
    const Verdict v = analyze(p);
    ASSERT_TRUE(v.certificate);
    const auto j = json_io::to_json(v, 5);
    const Certificate back = json_io::certificate_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(json_io::to_json(back).dump(), j.at("certificate").dump());
    EXPECT_TRUE(check_certificate(p, back).ok);
    for (const char* key : {"status", "certificate", "evidence", "seed", "versions"}) EXPECT_TRUE(j.contains(key)) << key;
    for (const char* key : {"kind", "chi", "prime", "subgroup_tables", "abelian_invariants"})
      EXPECT_TRUE(j.at("certificate").contains(key)) << key;
  }
  EXPECT_THROW(json_io::certificate_from_json(nlohmann::json::parse(R"({"kind":"Nope"})")), ParseError);
  EXPECT_THROW(json_io::certificate_from_json(nlohmann::json::parse(R"({"certificate":null})")), ParseError);
}

TEST(Json, TamperedCertificatesFail) {
  const Presentation bs = baumslag_solitar(2, 4);
  auto j = json_io::to_json(analyze(bs), 1);
  j["certificate"]["prime"] = 3;
  EXPECT_FALSE(check_certificate(bs, json_io::certificate_from_json(j)).ok);
  j["certificate"]["prime"] = 4;
  EXPECT_FALSE(check_certificate(bs, json_io::certificate_from_json(j)).ok);

  const Presentation h = parse_presentation("<a,t | t a^2 t^-1 a^-1 t a^-1 t^-1 a^-1>");
  auto k = json_io::to_json(analyze(h), 1);
  k["certificate"]["abelian_invariants"]["torsion"] = {2, 4};
  EXPECT_FALSE(check_certificate(h, json_io::certificate_from_json(k)).ok);
  k = json_io::to_json(analyze(h), 1);
  k["certificate"]["subgroup_tables"][0]["rows"][0][0] = 0;
  EXPECT_FALSE(check_certificate(h, json_io::certificate_from_json(k)).ok);
}

TEST(Presentation, FormatRoundTrip) {
  for (const char* s : {"<a,t | t a^2 t^-1 = a^3>", "<t,x,y,z | t x t^-1 = y, t y t^-1 = z, t z t^-1 = x y>",
                        "<a,b | [a,b]^2, (a b^-1)^3 a>", "<a | >"}) {
    const Presentation p = parse_presentation(s);
    EXPECT_EQ(parse_presentation(format_presentation(p)), p) << s;
  }
}
