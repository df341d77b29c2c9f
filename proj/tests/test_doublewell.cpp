#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tpt/doublewell.hpp"

#include <cmath>

using namespace tpt;

TEST_CASE("closed forms at the cos-end conformal points") {
    // UVc: even k = 2n+1 - nu_s + nu_c, odd k = 2n+1 + nu_s + nu_c
    auto uv = even_odd_closed(0.4, 2.5, CosEndPoint::UVc, 2);
    REQUIRE(uv.even.size() == 3);
    REQUIRE(uv.odd.size() == 3);
    CHECK(uv.even[0].point.magnitude == doctest::Approx(3.1));
    CHECK(uv.even[1].point.magnitude == doctest::Approx(5.1));
    CHECK(uv.odd[0].point.magnitude == doctest::Approx(3.9));
    CHECK(uv.odd[1].point.magnitude == doctest::Approx(5.9));
    // IRc flips the nu_c sign; shallow even level folds through zero
    auto ir = even_odd_closed(0.4, 0.3, CosEndPoint::IRc, 1);
    CHECK(ir.even[0].point.magnitude == doctest::Approx(0.3));
    CHECK(ir.even[1].point.magnitude == doctest::Approx(2.3));
    CHECK(ir.odd[0].point.magnitude == doctest::Approx(1.1));
    for (auto& lv : uv.even) CHECK(lv.parity == Parity::Even);
    for (auto& lv : uv.odd) CHECK(lv.parity == Parity::Odd);
}

TEST_CASE("merged view interleaves by energy") {
    auto sp = even_odd_closed(0.4, 2.5, CosEndPoint::UVc, 2);
    auto m = sp.merged();
    REQUIRE(m.size() == 6);
    for (size_t i = 1; i < m.size(); ++i)
        CHECK(m[i].point.magnitude > m[i - 1].point.magnitude);
    CHECK(m[0].parity == Parity::Even);
    CHECK(m[1].parity == Parity::Odd);
}

TEST_CASE("exceptional line alternates below nu = 1/2") {
    auto rep = exceptional_ordering(0.3, 5);
    CHECK_FALSE(rep.anomaly);
    REQUIRE(rep.order.size() >= 6);
    for (size_t i = 0; i < rep.order.size(); ++i)
        CHECK(rep.order[i] == (i % 2 == 0 ? Parity::Even : Parity::Odd));
    for (size_t i = 0; i < rep.expected_nodes.size(); ++i)
        CHECK(rep.expected_nodes[i] == int(i));
}

TEST_CASE("exceptional line reorders above nu = 1/2") {
    auto rep = exceptional_ordering(0.7, 5);
    CHECK(rep.anomaly);
    REQUIRE(rep.order.size() >= 5);
    CHECK(rep.order[0] == Parity::Even);
    CHECK(rep.order[1] == Parity::Even); // the anomaly: two evens lead
    CHECK(rep.order[2] == Parity::Odd);
    CHECK(rep.order[3] == Parity::Even);
    CHECK(rep.order[4] == Parity::Odd);
    // node counts follow 0,2,1,4,3,...
    REQUIRE(rep.expected_nodes.size() >= 5);
    CHECK(rep.expected_nodes[0] == 0);
    CHECK(rep.expected_nodes[1] == 2);
    CHECK(rep.expected_nodes[2] == 1);
    CHECK(rep.expected_nodes[3] == 4);
    CHECK(rep.expected_nodes[4] == 3);
}

TEST_CASE("exceptional line validates its window") {
    CHECK_THROWS_AS(exceptional_line(1.2, 3), domain_error);
    CHECK_THROWS_AS(exceptional_line(0.0, 3), domain_error);
}

TEST_CASE("exceptional spectra match the closed forms") {
    auto sp = exceptional_line(0.7, 3);
    REQUIRE(sp.even.size() == 4);
    REQUIRE(sp.odd.size() == 4);
    CHECK(sp.even[0].point.magnitude == doctest::Approx(0.4));  // |1 - 2 nu|
    CHECK(sp.even[1].point.magnitude == doctest::Approx(1.6));
    CHECK(sp.odd[0].point.magnitude == doctest::Approx(2.4));   // 1 + 2 nu
}

TEST_CASE("scale-datum double well reference towers") {
    // nu_s = 0.6, nu_c = 0.4, scale term -1.1
    const double even_k[] = {1.5728869, 3.788919,  5.8530177,
                             7.8852838, 9.9050397, 11.918501};
    const double odd_k[] = {2.9396888, 5.0333367, 7.0744625, 9.0981185,
                            11.11366};
    ScanConfig cfg;
    cfg.window_max = 12.5;
    cfg.kappa_cap = 5.0;
    auto sp = even_odd_scale(0.6, 0.4, -1.1, cfg);
    std::vector<double> ke, ko, kape, kapo;
    for (auto& lv : sp.even)
        (lv.point.sign == EnergySign::Positive ? ke : kape)
            .push_back(lv.point.magnitude);
    for (auto& lv : sp.odd)
        (lv.point.sign == EnergySign::Positive ? ko : kapo)
            .push_back(lv.point.magnitude);
    REQUIRE(ke.size() == 6);
    REQUIRE(ko.size() == 5);
    for (size_t i = 0; i < 6; ++i)
        CHECK(ke[i] == doctest::Approx(even_k[i]).epsilon(1e-6));
    for (size_t i = 0; i < 5; ++i)
        CHECK(ko[i] == doctest::Approx(odd_k[i]).epsilon(1e-6));
    // one bound pair below threshold; the even member sits deeper
    REQUIRE(kape.size() == 1);
    REQUIRE(kapo.size() == 1);
    CHECK(kape[0] == doctest::Approx(0.98673231).epsilon(1e-6));
    CHECK(kapo[0] == doctest::Approx(0.65943825).epsilon(1e-6));
}

TEST_CASE("attractive-core double well reference towers") {
    // nu_s = 0.7, |nu_c| = 2 pi, theta_c = pi/4
    const double even_kap[] = {2.0790943, 5.8544785, 6.8566826, 9.8983101,
                               15.559107, 25.199905, 41.274871};
    const double odd_kap[] = {3.8959893, 6.7445411, 9.8982974,
                              15.559107, 25.199905, 41.274871};
    ScanConfig cfg;
    cfg.window_max = 10.5;
    cfg.kappa_cap = 50.0;
    auto sp = even_odd_attractive(0.7, 2 * M_PI, M_PI / 4.0, cfg);
    std::vector<double> ke, ko, kape, kapo;
    for (auto& lv : sp.even)
        (lv.point.sign == EnergySign::Positive ? ke : kape)
            .push_back(lv.point.magnitude);
    for (auto& lv : sp.odd)
        (lv.point.sign == EnergySign::Positive ? ko : kapo)
            .push_back(lv.point.magnitude);
    REQUIRE(ke.size() == 2);
    REQUIRE(ko.size() == 2);
    CHECK(ke[0] == doctest::Approx(6.3363295).epsilon(1e-6));
    CHECK(ke[1] == doctest::Approx(9.811286).epsilon(1e-6));
    CHECK(ko[0] == doctest::Approx(5.0527502).epsilon(1e-6));
    CHECK(ko[1] == doctest::Approx(8.8468357).epsilon(1e-6));
    REQUIRE(kape.size() == 7);
    REQUIRE(kapo.size() == 6);
    for (size_t i = 0; i < 7; ++i)
        CHECK(kape[i] == doctest::Approx(even_kap[i]).epsilon(1e-6));
    for (size_t i = 0; i < 6; ++i)
        CHECK(kapo[i] == doctest::Approx(odd_kap[i]).epsilon(1e-6));
}

TEST_CASE("deep even/odd degeneracy sharpens with depth") {
    ScanConfig cfg;
    cfg.kappa_cap = 50.0;
    auto sp = even_odd_attractive(0.7, 2 * M_PI, M_PI / 4.0, cfg);
    std::vector<double> kape, kapo;
    for (auto& lv : sp.even)
        if (lv.point.sign == EnergySign::Negative)
            kape.push_back(lv.point.magnitude);
    for (auto& lv : sp.odd)
        if (lv.point.sign == EnergySign::Negative)
            kapo.push_back(lv.point.magnitude);
    REQUIRE(kape.size() == 7);
    REQUIRE(kapo.size() == 6);
    // pair the shifted towers (even has one extra shallow state)
    double gap_mid = std::abs(kape[3] - kapo[2]) / kape[3];
    double gap_deep = std::abs(kape[6] - kapo[5]) / kape[6];
    CHECK(gap_deep < gap_mid);
    CHECK(gap_deep < 1e-6);
    // deep tail ratio approaches e^{pi/|nu_c|} = e^{1/2}
    CHECK(kape[6] / kape[5] ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-2));
}
