#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpt/model.hpp"

#include <cmath>

using namespace tpt;

TEST_CASE("nu_from_g across the regimes") {
    CHECK(nu_from_g(2.0).kind == NuKind::RealPositive);
    CHECK(nu_from_g(2.0).magnitude == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(nu_from_g(0.0).magnitude == doctest::Approx(0.5));
    CHECK(nu_from_g(-0.25).kind == NuKind::Zero);
    CHECK(nu_from_g(-0.25 + 1e-14).kind == NuKind::Zero); // inside tolerance
    CHECK(nu_from_g(-0.5).kind == NuKind::Imaginary);
    CHECK(nu_from_g(-0.5).magnitude == doctest::Approx(0.5));
    CHECK(nu_from_g(-0.25 - 4 * M_PI * M_PI).magnitude ==
          doctest::Approx(2 * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(nu_from_g(std::nan("")), domain_error);
}

TEST_CASE("regime boundaries") {
    CHECK(regime_of(0.75) == CouplingRegime::StrongRepulsive);
    CHECK(regime_of(0.75 - 1e-9) == CouplingRegime::WeakMedium);
    CHECK(regime_of(-0.25) == CouplingRegime::CriticalBF);
    CHECK(regime_of(-0.25 - 1e-9) == CouplingRegime::StrongAttractive);
    CHECK(regime_of(-0.25 + 1e-9) == CouplingRegime::WeakMedium);
}

TEST_CASE("potential and domain") {
    PotentialSpec s{2.0, 1.0, 3.0};
    double x = M_PI / 8.0; // alpha x = pi/4
    double v = potential_value(s, x);
    CHECK(v == doctest::Approx(4.0 * (1.0 / 0.5 + 3.0 / 0.5)));
    CHECK_THROWS_AS(potential_value(s, 0.0), domain_error);
    CHECK_THROWS_AS(potential_value(s, M_PI / 4.0), domain_error);
}

TEST_CASE("SUSY structures") {
    PotentialSpec s{1.0, (0.4 * 0.4) - 0.25, (2.5 * 2.5) - 0.25};
    CHECK(susy_ground_k2(s) == doctest::Approx(3.9 * 3.9).epsilon(1e-12));
    PotentialSpec p = susy_partner(s);
    CHECK(nu_from_g(p.g_s).magnitude == doctest::Approx(1.4));
    CHECK(nu_from_g(p.g_c).magnitude == doctest::Approx(3.5));
    // W^2 - W' + k0^2 reproduces the potential
    double x = 0.6;
    double h = 1e-6;
    double w = superpotential_value(s, x);
    double wp = (superpotential_value(s, x + h) -
                 superpotential_value(s, x - h)) / (2.0 * h);
    CHECK(w * w - wp + susy_ground_k2(s) ==
          doctest::Approx(potential_value(s, x)).epsilon(1e-6));
    PotentialSpec bad{1.0, -0.5, 0.0};
    CHECK_THROWS_AS(superpotential_value(bad, 0.3), regime_error);
}

TEST_CASE("datum compatibility") {
    using K = EndDatum::Kind;
    CHECK(datum_matches(EndDatum::uv(), CouplingRegime::StrongRepulsive));
    CHECK_FALSE(datum_matches(EndDatum::ir(), CouplingRegime::StrongRepulsive));
    CHECK(datum_matches(EndDatum::scale(1.0, -1), CouplingRegime::WeakMedium));
    CHECK(datum_matches(EndDatum::phase(0.5), CouplingRegime::StrongAttractive));
    CHECK_FALSE(datum_matches(EndDatum::phase(0.5), CouplingRegime::WeakMedium));
    CHECK(datum_matches(EndDatum::critical(2.0), CouplingRegime::CriticalBF));
    CHECK(EndDatum::phase(0.5).kind == K::Phase);
}

TEST_CASE("scale term and angle wrap") {
    EndDatum d = EndDatum::scale(2.0, -1);
    CHECK(d.scale_term(0.4, 0.5) ==
          doctest::Approx(-std::pow(1.0, 0.8)).epsilon(1e-14));
    CHECK(EndDatum::uv().scale_term(0.4, 1.0) == 0.0);
    CHECK_THROWS_AS(EndDatum::phase(0.3).scale_term(0.4, 1.0), regime_error);
    CHECK(EndDatum::wrap_angle(3.0 * M_PI / 2.0) ==
          doctest::Approx(-M_PI / 2.0));
    CHECK(EndDatum::wrap_angle(M_PI) == doctest::Approx(-M_PI));
}

TEST_CASE("energy point continuation") {
    EnergyPoint pos{EnergySign::Positive, 2.0};
    EnergyPoint neg{EnergySign::Negative, 3.0};
    CHECK(pos.k_over_alpha() == cplx{2.0, 0.0});
    CHECK(neg.k_over_alpha() == cplx{0.0, 3.0});
}
