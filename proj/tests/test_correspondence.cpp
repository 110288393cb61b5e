#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exotic/correspondence.hpp"

#include <algorithm>

using namespace exotic;

namespace {

ExoticOrbitLabel lab(const Ambient& amb, unsigned r, unsigned s, ExoticType t) {
    return ExoticOrbitLabel{amb, r, s, t};
}

// (n1, n2, ell, mark, r, s, type) rows of an expected correspondence table.
struct ExpectedRow {
    unsigned n1, n2, ell, mark, r, s;
    ExoticType typ;
};

void check_table(const Ambient& amb, const std::vector<ExpectedRow>& expected) {
    const CorrespondenceTable table = full_correspondence(amb, 0);
    REQUIRE(table.entries.size() == expected.size());
    for (const ExpectedRow& row : expected) {
        const MarkedTableau t{amb, row.n1, row.n2, row.ell, row.mark};
        bool found = false;
        for (const CorrespondenceEntry& e : table.entries)
            if (e.tableau == t) {
                found = true;
                CHECK(e.label == lab(amb, row.r, row.s, row.typ));
            }
        CHECK_MESSAGE(found, "missing tableau ", render_tableau(t, RenderFormat::ascii));
    }
}

} // namespace

TEST_CASE("good_partitions") {
    const Ambient a312(3, 1, 2), a311(3, 1, 1);
    CHECK(good_partitions(lab(a312, 1, 0, ExoticType::I)) ==
          std::vector<Partition>{Partition({2, 1, 1})});
    CHECK(good_partitions(lab(a312, 1, 0, ExoticType::II)) ==
          std::vector<Partition>{Partition({2, 1, 1}), Partition({2, 2})});
    CHECK(good_partitions(lab(a311, 1, 0, ExoticType::II)) ==
          std::vector<Partition>{Partition({2, 1, 1})});
    CHECK(good_partitions(lab(a312, 0, 1, ExoticType::III)) ==
          std::vector<Partition>{Partition({2, 1, 1})});
}

TEST_CASE("delta on the paper's cases") {
    const Ambient a312(3, 1, 2);
    const long long dim_y = dim_conormal_variety(a312); // 2*2 + 3 - 1 = 6
    CHECK(dim_y == 6);

    // type I: always good for (n-l,l)*
    CHECK(delta(lab(a312, 1, 0, ExoticType::I), Partition({2, 1, 1})) == dim_y);
    // type III: good for (n-l,l)*, empty for the (l+1)-stratum
    CHECK(delta(lab(a312, 0, 1, ExoticType::III), Partition({2, 1, 1})) == dim_y);
    CHECK(!delta(lab(a312, 0, 1, ExoticType::III), Partition({2, 2})).has_value());
    // type I: (l+1)-stratum empty as well
    CHECK(!delta(lab(a312, 1, 0, ExoticType::I), Partition({2, 2})).has_value());
    // IIstar: both good
    CHECK(delta(lab(a312, 1, 0, ExoticType::II), Partition({2, 1, 1})) == dim_y);
    CHECK(delta(lab(a312, 1, 0, ExoticType::II), Partition({2, 2})) == dim_y);
    // II0 with a nonempty (l+1)-stratum: deficit l - q
    const Ambient a311(3, 1, 1);
    const long long dim_y1 = dim_conormal_variety(a311); // 3 + 3 - 1 = 5
    CHECK(delta(lab(a311, 0, 0, ExoticType::II), Partition({1, 1, 1, 1})) == dim_y1);
    CHECK(delta(lab(a311, 0, 0, ExoticType::II), Partition({2, 1, 1})) ==
          dim_y1 + (0 - 1));
    CHECK_THROWS_AS((void)delta(lab(a312, 1, 0, ExoticType::I), Partition({3, 1})),
                    std::invalid_argument);
}

TEST_CASE("delta sweep: good pairs hit dim Y, non-good strata fall short") {
    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned q = 0; p + q <= 10; ++q)
            for (unsigned k = 0; k <= p + q; ++k) {
                const Ambient amb(p, q, k);
                const long long dim_y = dim_conormal_variety(amb);
                for (const ExoticOrbitLabel& label : enumerate_pi2k(amb)) {
                    const auto good = good_partitions(label);
                    for (const Partition& lam : good)
                        CHECK(delta(label, lam) == dim_y);
                    const unsigned ell = label.r + label.s;
                    if (2 * (ell + 1) > amb.n())
                        continue;
                    const Partition lam_plus = two_step_partition(amb.n(), ell + 1);
                    if (std::find(good.begin(), good.end(), lam_plus) != good.end())
                        continue;
                    const auto d = delta(label, lam_plus);
                    if (label.typ != ExoticType::II) {
                        CHECK(!d.has_value());
                    } else if (d) {
                        CHECK(*d < dim_y);
                        CHECK(*d == dim_y + (long long)ell - (long long)q);
                    }
                }
            }
}

TEST_CASE("fiber_dimension closed forms on representatives") {
    const Ambient a312(3, 1, 2);
    // type III: 0 for (n-l,l)*, empty for the (l+1)-stratum
    const ExoticPoint p3 = representative(lab(a312, 0, 1, ExoticType::III));
    CHECK(fiber_dimension(p3, Partition({2, 1, 1})) == 0);
    CHECK(!fiber_dimension(p3, Partition({2, 2})).has_value());
    // type I: p - rk a
    const ExoticPoint p1 = representative(lab(a312, 1, 0, ExoticType::I));
    CHECK(fiber_dimension(p1, Partition({2, 1, 1})) == 2); // 3 - 1
    // type II, lam = (n-l,l)*: rk b
    const ExoticPoint p2 = representative(lab(a312, 0, 1, ExoticType::II));
    CHECK(fiber_dimension(p2, Partition({2, 1, 1})) == 1);
    // type II, lam = (n-l-1,l+1)*: p - rk a - 1
    CHECK(fiber_dimension(p2, Partition({2, 2})) == 2); // 3 - 0 - 1
    // other Jordan types never meet the fiber
    CHECK(!fiber_dimension(p1, Partition({4})).has_value());

    for (unsigned p = 1; p <= 5; ++p)
        for (unsigned q = 0; p + q <= 10; ++q)
            for (unsigned k = 0; k <= p + q; ++k) {
                const Ambient amb(p, q, k);
                for (const ExoticOrbitLabel& label : enumerate_pi2k(amb)) {
                    const ExoticPoint rep = representative(label);
                    const unsigned ell = label.r + label.s;
                    // self-asserting against the closed forms
                    (void)fiber_dimension(rep, two_step_partition(amb.n(), ell));
                    if (2 * (ell + 1) <= amb.n())
                        (void)fiber_dimension(rep, two_step_partition(amb.n(), ell + 1));
                }
            }
}

TEST_CASE("generic_x postconditions and shapes") {
    SeededRng rng(17);
    const Ambient a311(3, 1, 1);

    // type III: x = z itself
    const ExoticPoint p3 = representative(lab(a311, 0, 1, ExoticType::III));
    const RatMatrix x3 = generic_x(p3, Partition({2, 1, 1}), rng);
    CHECK(theta_split(x3, 3, 1).theta_part.is_zero());

    // type I at (3,1): x = [[0, alpha, beta, 1], 0, 0, 0] with u in ker a^t
    const ExoticPoint p1 = representative(lab(a311, 1, 0, ExoticType::I));
    const RatMatrix x1 = generic_x(p1, Partition({2, 1, 1}), rng);
    CHECK(x1.at(0, 0) == 0);
    CHECK(x1.at(0, 3) == 1);
    for (unsigned i = 1; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
            CHECK(x1.at(i, j) == 0);

    // IIstar with lam = (2,2): rank-2 witness with a nonzero u-component
    const Ambient a312(3, 1, 2);
    const ExoticPoint p2 = representative(lab(a312, 1, 0, ExoticType::II));
    const RatMatrix x2 = generic_x(p2, Partition({2, 2}), rng);
    CHECK(rank(x2) == 2);
    CHECK(jordan_type(x2) == Partition({2, 2}));
    CHECK(!theta_split(x2, 3, 1).theta_part.is_zero());

    // empty stratum rejected
    CHECK_THROWS_AS((void)generic_x(p3, Partition({2, 2}), rng), std::invalid_argument);
}

TEST_CASE("generic_w") {
    SeededRng rng(19);
    // rk x = k: W = Im x deterministically (Table 1 row 4: W = V2)
    const RatMatrix z = RatMatrix::from_ints(
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
    const Subspace w = generic_w(z, 1, rng);
    CHECK(w == Subspace::from_rows(RatMatrix::from_ints({{0, 0, 0, 1}})));

    // x = 0: a random k-subspace, uniform over samples
    const Subspace w0 = generic_w(RatMatrix::zero(4, 4), 2, rng);
    CHECK(w0.dim() == 2);

    // preconditions
    CHECK_THROWS_AS((void)generic_w(RatMatrix::identity(2), 1, rng),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generic_w(z, 0, rng), std::invalid_argument); // rk > min{k,n-k}

    // containment always holds
    SeededRng rng2(23);
    for (unsigned trial = 0; trial < 50; ++trial) {
        const RatMatrix x = generic_x(
            representative(lab(Ambient(3, 2, 2), 1, 0, ExoticType::II)),
            Partition({2, 1, 1, 1}), rng2);
        const Subspace ws = generic_w(x, 2, rng2);
        CHECK(contains(ws, image(x)));
        CHECK(contains(kernel(x), ws));
        CHECK(ws.dim() == 2);
    }
}

TEST_CASE("phi_preimage on the paper's rows") {
    const Ambient a311(3, 1, 1);
    SeededRng rng(0);
    const auto pre3 = phi_preimage(lab(a311, 0, 1, ExoticType::III), rng);
    REQUIRE(pre3.size() == 1);
    CHECK(pre3[0].lam == Partition({2, 1, 1}));
    CHECK(pre3[0].tableau == MarkedTableau{a311, 0, 1, 0, 0});

    const Ambient a312(3, 1, 2);
    SeededRng rng2(0);
    const auto pre2 = phi_preimage(lab(a312, 1, 0, ExoticType::II), rng2);
    REQUIRE(pre2.size() == 2);
    CHECK(pre2[0].lam == Partition({2, 1, 1}));
    CHECK(pre2[0].tableau == MarkedTableau{a312, 2, 0, 0, 0});
    CHECK(pre2[1].lam == Partition({2, 2}));
    CHECK(pre2[1].tableau == MarkedTableau{a312, 2, 0, 0, 2});

    const Ambient a222(2, 2, 2);
    SeededRng rng3(0);
    const auto pre1 = phi_preimage(lab(a222, 1, 1, ExoticType::I), rng3);
    REQUIRE(pre1.size() == 1);
    CHECK(pre1[0].tableau == MarkedTableau{a222, 1, 1, 0, 2});
}

TEST_CASE("majority is stable: winners take at least 90% of samples") {
    for (const Ambient amb : {Ambient(3, 1, 1), Ambient(3, 1, 2), Ambient(2, 2, 2)}) {
        const auto labels = enumerate_pi2k(amb);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            SeededRng rng = SeededRng(0).child(i);
            for (const PreimageEntry& e : phi_preimage(labels[i], rng)) {
                CHECK(!e.escalated);
                CHECK(10 * e.votes >= 9 * e.samples);
            }
        }
    }
}

TEST_CASE("full correspondence reproduces the k=1 table for (3,1)") {
    check_table(Ambient(3, 1, 1), {
        {1, 0, 0, 2, /**/ 1, 0, ExoticType::I},
        {1, 0, 0, 0, /**/ 1, 0, ExoticType::II},
        {0, 0, 1, 1, /**/ 0, 1, ExoticType::II},
        {0, 1, 0, 0, /**/ 0, 1, ExoticType::III},
        {0, 0, 1, 0, /**/ 0, 0, ExoticType::II},
    });
}

TEST_CASE("full correspondence reproduces the k=2 table for (3,1)") {
    check_table(Ambient(3, 1, 2), {
        {1, 0, 1, 2, /**/ 1, 0, ExoticType::I},
        {2, 0, 0, 0, /**/ 1, 0, ExoticType::II},
        {2, 0, 0, 2, /**/ 1, 0, ExoticType::II},
        {1, 0, 1, 1, /**/ 0, 1, ExoticType::II},
        {1, 1, 0, 2, /**/ 0, 1, ExoticType::II},
        {1, 1, 0, 0, /**/ 0, 1, ExoticType::III},
        {1, 0, 1, 0, /**/ 0, 0, ExoticType::II},
    });
}

TEST_CASE("full correspondence reproduces the p=q=k=2 table") {
    check_table(Ambient(2, 2, 2), {
        {2, 0, 0, 2, /**/ 2, 0, ExoticType::I},
        {1, 1, 0, 2, /**/ 1, 1, ExoticType::I},
        {1, 1, 0, 0, /**/ 1, 1, ExoticType::III},
        {0, 2, 0, 0, /**/ 0, 2, ExoticType::III},
        {1, 0, 1, 2, /**/ 1, 0, ExoticType::I},
        {1, 0, 1, 1, /**/ 1, 0, ExoticType::II},
        {0, 1, 1, 1, /**/ 0, 1, ExoticType::II},
        {0, 1, 1, 0, /**/ 0, 1, ExoticType::III},
        {0, 0, 2, 1, /**/ 0, 0, ExoticType::II},
    });
}

TEST_CASE("full correspondence reproduces the p=q=k=3 appendix table") {
    check_table(Ambient(3, 3, 3), {
        {3, 0, 0, 2, /**/ 3, 0, ExoticType::I},
        {2, 1, 0, 0, /**/ 2, 1, ExoticType::III},
        {2, 1, 0, 2, /**/ 2, 1, ExoticType::I},
        {1, 2, 0, 0, /**/ 1, 2, ExoticType::III},
        {1, 2, 0, 2, /**/ 1, 2, ExoticType::I},
        {0, 3, 0, 0, /**/ 0, 3, ExoticType::III},
        {2, 0, 1, 1, /**/ 2, 0, ExoticType::II},
        {2, 0, 1, 2, /**/ 2, 0, ExoticType::I},
        {1, 1, 1, 0, /**/ 1, 1, ExoticType::III},
        {1, 1, 1, 1, /**/ 1, 1, ExoticType::II},
        {1, 1, 1, 2, /**/ 1, 1, ExoticType::I},
        {0, 2, 1, 0, /**/ 0, 2, ExoticType::III},
        {0, 2, 1, 1, /**/ 0, 2, ExoticType::II},
        {1, 0, 2, 1, /**/ 1, 0, ExoticType::II},
        {1, 0, 2, 2, /**/ 1, 0, ExoticType::I},
        {0, 1, 2, 0, /**/ 0, 1, ExoticType::III},
        {0, 1, 2, 1, /**/ 0, 1, ExoticType::II},
        {0, 0, 3, 1, /**/ 0, 0, ExoticType::II},
    });
}

TEST_CASE("witnesses are re-verifiable") {
    const Ambient amb(3, 1, 2);
    const CorrespondenceTable table = full_correspondence(amb, 0);
    for (const CorrespondenceEntry& e : table.entries) {
        const Witness& w = e.witness;
        CHECK((w.x * w.x).is_zero());
        CHECK(jordan_type(w.x) == e.good_lam);
        CHECK(contains(w.W, image(w.x)));
        CHECK(contains(kernel(w.x), w.W));
        // the witness projects onto the representative of the image orbit
        const ExoticPoint rep = representative(e.label);
        const ThetaSplit split = theta_split(w.x, amb.p, amb.q);
        for (unsigned i = 0; i < amb.p; ++i)
            for (unsigned j = 0; j < amb.q; ++j)
                CHECK(split.minus_theta_part.at(i, amb.p + j) == rep.a.at(i, j));
        CHECK(classify_flag_pair(FlagPair{amb, w.W, w.L}) == e.tableau);
    }
}

TEST_CASE("bijectivity criterion") {
    const CorrespondenceTable t311 = full_correspondence(Ambient(3, 1, 1), 0);
    CHECK(check_bijectivity_criterion(Ambient(3, 1, 1), t311));
    const CorrespondenceTable t312 = full_correspondence(Ambient(3, 1, 2), 0);
    CHECK(!check_bijectivity_criterion(Ambient(3, 1, 2), t312));
    CHECK(t311.entries.size() == 5);
    CHECK(t312.entries.size() == 7);
    for (unsigned m = 1; m <= 3; ++m) {
        const Ambient amb(m, m, m);
        CHECK(check_bijectivity_criterion(amb, full_correspondence(amb, 0)));
    }
}

TEST_CASE("counting identity on a small sweep") {
    for (unsigned p = 1; p <= 4; ++p)
        for (unsigned q = 0; p + q <= 6; ++q)
            for (unsigned k = 0; k <= p + q; ++k) {
                const Ambient amb(p, q, k);
                const auto labels = enumerate_pi2k(amb);
                std::size_t iistar = 0;
                for (const auto& label : labels)
                    if (refine_type(label) == RefinedType::IIstar)
                        ++iistar;
                CHECK(enumerate_theta2k(amb).size() == labels.size() + iistar);
            }
}

TEST_CASE("closed form phi for p = q = k") {
    const Ambient a222(2, 2, 2);
    CHECK(closed_form_phi_pqk_equal(MarkedTableau{a222, 1, 0, 1, 1}) ==
          lab(a222, 1, 0, ExoticType::II));
    CHECK(closed_form_phi_pqk_equal(MarkedTableau{a222, 0, 2, 0, 0}) ==
          lab(a222, 0, 2, ExoticType::III));
    const Ambient a333(3, 3, 3);
    CHECK(closed_form_phi_pqk_equal(MarkedTableau{a333, 1, 1, 1, 1}) ==
          lab(a333, 1, 1, ExoticType::II));
    CHECK_THROWS_AS((void)closed_form_phi_pqk_equal(MarkedTableau{Ambient(3, 1, 1), 1, 0, 0, 2}),
                    std::invalid_argument);

    for (unsigned m = 1; m <= 3; ++m) {
        const Ambient amb(m, m, m);
        const CorrespondenceTable table = full_correspondence(amb, 0);
        for (const CorrespondenceEntry& e : table.entries)
            CHECK(closed_form_phi_pqk_equal(e.tableau) == e.label);
    }
}

TEST_CASE("parallel and serial runs produce identical tables") {
    for (const Ambient amb : {Ambient(3, 1, 2), Ambient(2, 2, 2), Ambient(3, 2, 3)}) {
        CorrespondenceOptions serial, parallel;
        parallel.parallel = true;
        const CorrespondenceTable a = full_correspondence(amb, 0, serial);
        const CorrespondenceTable b = full_correspondence(amb, 0, parallel);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(a.entries[i].tableau == b.entries[i].tableau);
            CHECK(a.entries[i].label == b.entries[i].label);
            CHECK(a.entries[i].good_lam == b.entries[i].good_lam);
            CHECK(a.entries[i].witness.x == b.entries[i].witness.x);
            CHECK(a.entries[i].witness.W == b.entries[i].witness.W);
        }
    }
}

TEST_CASE("q = 0: the two-fiber IIstar case from first principles") {
    // p=3, q=0, k=1: Theta = {(<e_i>-free tableaux)}: n1=1 with marks 0,2;
    // Pi = {(0,0,II)} refined IIstar; its fiber must be the whole Theta.
    const Ambient amb(3, 0, 1);
    const CorrespondenceTable table = full_correspondence(amb, 0);
    REQUIRE(table.entries.size() == 2);
    REQUIRE(table.fibers.size() == 1);
    CHECK(table.fibers[0].preimage.size() == 2);
    CHECK(!table.bijective);
    CHECK(!check_bijectivity_criterion(amb, table)); // p=3 > max{1,2,1}=2
}
