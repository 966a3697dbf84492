#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"

using namespace casimir;

TEST_CASE("bulk amplitudes at normal incidence and grazing limits") {
  const auto r = fresnel_bulk(4.0, 1.0, AlphaVariable(1.0));
  CHECK(r.te == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(r.tm == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

  for (double a : {1.0, 2.0, 1e5}) {
    const auto v = fresnel_bulk(1.0, 1.0, AlphaVariable(a));
    CHECK(v.te == 0.0);
    CHECK(v.tm == 0.0);
  }

  const auto far = fresnel_bulk(4.0, 1.0, AlphaVariable(1e8));
  CHECK(std::abs(far.tm + 0.6) < 1e-7);
  CHECK(std::abs(far.te) < 1e-7);
}

TEST_CASE("alpha below one is rejected") {
  CHECK_THROWS_AS(AlphaVariable(0.999), Error);
  CHECK_THROWS_AS(fresnel_bulk(-1.0, 1.0, AlphaVariable(1.0)), Error);
}

TEST_CASE("sign change points") {
  const auto both = sign_change_points(3.0, 3.0);
  REQUIRE(both.alpha0_tm);
  REQUIRE(both.alpha0_te);
  CHECK(*both.alpha0_tm == doctest::Approx(1.0));
  CHECK(*both.alpha0_te == doctest::Approx(1.0));

  const auto diel = sign_change_points(4.0, 1.0);
  CHECK_FALSE(diel.alpha0_tm);
  CHECK_FALSE(diel.alpha0_te);
  // The TM amplitude indeed keeps its sign on [1, 1e3].
  for (double a = 1.0; a < 1e3; a *= 1.01) {
    CHECK(fresnel_bulk(4.0, 1.0, AlphaVariable(a)).tm < 0.0);
  }

  const auto mag = sign_change_points(1.0, 4.0);
  CHECK_FALSE(mag.alpha0_tm);
  CHECK_FALSE(mag.alpha0_te);

  // Mainly magnetic: the TM amplitude changes sign exactly at alpha0.
  const auto mm = sign_change_points(2.0, 5.0);
  REQUIRE(mm.alpha0_tm);
  const double a0 = *mm.alpha0_tm;
  CHECK(fresnel_bulk(2.0, 5.0, AlphaVariable(a0 * 0.99)).tm > 0.0);
  CHECK(fresnel_bulk(2.0, 5.0, AlphaVariable(a0 * 1.01)).tm < 0.0);
  CHECK(std::abs(fresnel_bulk(2.0, 5.0, AlphaVariable(a0)).tm) < 1e-14);
}

TEST_CASE("amplitude properties on random inputs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lg(-3.0, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const double eps = std::pow(10.0, lg(rng));
    const double mu = std::pow(10.0, lg(rng));
    const double alpha = 1.0 + std::pow(10.0, lg(rng));
    const auto r = fresnel_bulk(eps, mu, AlphaVariable(alpha));
    REQUIRE(std::abs(r.te) <= 1.0);
    REQUIRE(std::abs(r.tm) <= 1.0);

    // Duality eps <-> mu.
    const auto d = fresnel_bulk(mu, eps, AlphaVariable(alpha));
    REQUIRE(d.tm == doctest::Approx(-r.te).epsilon(1e-12));
    REQUIRE(d.te == doctest::Approx(-r.tm).epsilon(1e-12));

    const auto one = fresnel_bulk(eps, mu, AlphaVariable(1.0));
    REQUIRE(one.te == one.tm);
  }
}

TEST_CASE("non-magnetic amplitudes are non-positive") {
  for (double eps : {1.0001, 1.5, 10.0, 1e6}) {
    for (double a = 1.0; a < 1e4; a *= 1.3) {
      const auto r = fresnel_bulk(eps, 1.0, AlphaVariable(a));
      CHECK(r.te <= 0.0);
      CHECK(r.tm <= 0.0);
    }
  }
}

TEST_CASE("monotonicity in alpha for eps > mu") {
  for (auto [eps, mu] : {std::pair{4.0, 1.0}, std::pair{10.0, 3.0}, std::pair{2.0, 1.5}}) {
    double prev_te = -INFINITY, prev_tm = INFINITY;
    for (double a = 1.0; a < 1e4; a *= 1.01) {
      const auto r = fresnel_bulk(eps, mu, AlphaVariable(a));
      REQUIRE(r.te >= prev_te - 1e-15);
      REQUIRE(r.tm <= prev_tm + 1e-15);
      prev_te = r.te;
      prev_tm = r.tm;
    }
  }
}

TEST_CASE("layered mirrors") {
  const Material sub{ResponseModel::drude(2e15, 1e13), ResponseModel::vacuum()};
  const Material coat{ResponseModel::lorentz(1e15, 5e14, 1e13),
                      ResponseModel::lorentz(2e15, 5e14, 1e13)};
  const ImaginaryFrequency xi(3e14);
  const double e_sub = sub.eps.evaluate(xi.value());
  const double e_c = coat.eps.evaluate(xi.value());
  const double m_c = coat.mu.evaluate(xi.value());

  for (auto pol : kPolarizations) {
    for (double a : {1.0, 1.7, 30.0}) {
      const AlphaVariable alpha(a);
      // A bare mirror is exactly the bulk formula.
      CHECK(layered_reflection(Mirror::bare(sub), xi, alpha, pol) ==
            fresnel_bulk(e_sub, 1.0, alpha)[pol]);

      // Vanishing coating.
      Mirror thin{{{coat, 1e-30}}, sub};
      CHECK(std::abs(layered_reflection(thin, xi, alpha, pol) -
                     fresnel_bulk(e_sub, 1.0, alpha)[pol]) < 1e-10);

      // Coating of the substrate material.
      Mirror same{{{sub, 1e-7}}, sub};
      CHECK(std::abs(layered_reflection(same, xi, alpha, pol) -
                     fresnel_bulk(e_sub, 1.0, alpha)[pol]) < 1e-12);

      // Optically thick coating: kappa d = 200.
      const double kappa = xi.value() / kSpeedOfLight * std::sqrt(e_c * m_c - 1.0 + a * a);
      Mirror thick{{{coat, 200.0 / kappa}}, sub};
      CHECK(std::abs(layered_reflection(thick, xi, alpha, pol) -
                     fresnel_bulk(e_c, m_c, alpha)[pol]) < 1e-8);

      // Opaque guard.
      Mirror opaque{{{coat, 1e6 / kappa}}, sub};
      CHECK(std::abs(layered_reflection(opaque, xi, alpha, pol) -
                     fresnel_bulk(e_c, m_c, alpha)[pol]) < 1e-12);

      Mirror mid{{{coat, 0.3 / kappa}}, sub};
      CHECK(std::abs(layered_reflection(mid, xi, alpha, pol)) <= 1.0);
    }
  }
}

TEST_CASE("coating over a perfect conductor") {
  const Material coat{ResponseModel::drude(1e15, 1e13), ResponseModel::vacuum()};
  const Mirror m{{{coat, 1e-8}}, Material::perfect_conductor()};
  const ImaginaryFrequency xi(1e14);
  for (auto pol : kPolarizations) {
    const double r = layered_reflection(m, xi, AlphaVariable(2.0), pol);
    CHECK(r < 0.0);
    CHECK(r >= -1.0);
  }
  CHECK(layered_reflection(Mirror::perfect(), xi, AlphaVariable(3.0), Polarization::TE) == -1.0);
}

TEST_CASE("malformed mirrors") {
  Mirror bad_mu = Mirror::bare({ResponseModel::vacuum(), ResponseModel::perfect_conductor()});
  CHECK_THROWS_AS(bad_mu.validate(), Error);
  Mirror perfect_coat{{{Material::perfect_conductor(), 1e-7}}, Material::vacuum()};
  CHECK_THROWS_AS(perfect_coat.validate(), Error);
  Mirror neg{{{Material::vacuum(), -1e-7}}, Material::vacuum()};
  CHECK_THROWS_AS(neg.validate(), Error);
}

TEST_CASE("weak media keep relative accuracy") {
  // eps - 1 = 1e-12: the amplitude is O(1e-12) and must be resolved to many
  // digits, which the naive (q - eps alpha) form cannot do.
  const double chi = 1e-12;
  const double a = 1.5;
  const auto r = interface_reflection(0.0, 0.0, chi, 0.0, a);
  // Leading order: r_tm = chi (1 - 2 a^2) / (4 a^2), r_te = -chi / (4 a^2).
  CHECK(r.tm == doctest::Approx(chi * (1.0 - 2.0 * a * a) / (4.0 * a * a)).epsilon(1e-9));
  CHECK(r.te == doctest::Approx(-chi / (4.0 * a * a)).epsilon(1e-9));
}
