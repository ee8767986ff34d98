#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittkit/automorphism.hpp"
#include "wittkit/structure.hpp"
#include "wittkit/errors.hpp"

using namespace wittkit;

namespace {

Element L(const GammaConfig& cfg, int d, int i) {
    return Element::basis(cfg, GroupElement{{d}}, i);
}

AutElement flip(const GammaConfig& cfg, Scalar tau1) {
    return {Character(cfg, {std::move(tau1)}), ScaleMap(cfg, cfg.scalar(-1), {{-1}})};
}

}  // namespace

TEST_CASE("aut_apply on basis elements") {
    GammaConfig sym(1, {"q"});
    Scalar q = Scalar::generator(1, 0);
    AutElement a = flip(sym, q);
    // L(1,2) -> q * (-1)^{-3} L(-1,2)
    CHECK(aut_apply(sym, a, L(sym, 1, 2)) == L(sym, -1, 2).scaled(-q));
    // tau(0) = 1: L(0,0) -> c^{-1} L(0,0)
    CHECK(aut_apply(sym, a, L(sym, 0, 0)) == L(sym, 0, 0).scaled(sym.scalar(-1)));

    AutElement id = aut_identity(sym);
    Element x = L(sym, 2, 1).scaled(q) + L(sym, -1, 0);
    CHECK(aut_apply(sym, id, x) == x);
    CHECK_THROWS_AS(aut_apply(sym, id, Element::central(sym)), CentralTermPresent);
}

TEST_CASE("composition law on the generators") {
    GammaConfig z = GammaConfig::integers();
    AutElement a1 = flip(z, z.scalar(2));
    AutElement a2 = flip(z, z.scalar(3));
    AutElement prod = aut_compose(z, a1, a2);
    // c = (-1)(-1) = 1, tau(1) = tau1(-1) tau2(1) = (1/2) * 3
    CHECK(prod.c.value().is_one());
    CHECK(prod.tau.values()[0] == z.scalar(rat(3, 2)));
    CHECK(aut_compose(z, a1, aut_identity(z)) == a1);
    CHECK(aut_compose(z, aut_identity(z), a1) == a1);
}

TEST_CASE("functoriality of composition on a window sweep") {
    GammaConfig z = GammaConfig::integers();
    std::vector<AutElement> auts{flip(z, z.scalar(2)),
                                 {Character(z, {z.scalar(rat(1, 3))}), ScaleMap::identity(z)},
                                 flip(z, z.scalar(rat(-5, 2)))};
    Window w{2, 2};
    for (const auto& a1 : auts)
        for (const auto& a2 : auts) {
            AutElement prod = aut_compose(z, a1, a2);
            for (const auto& idx : window_basis(z, w)) {
                Element x = Element::basis(z, idx.degree, idx.level);
                CHECK(aut_apply(z, prod, x) == aut_apply(z, a1, aut_apply(z, a2, x)));
            }
        }
}

TEST_CASE("aut_verify accepts every valid automorphism") {
    GammaConfig z = GammaConfig::integers();
    Window w{2, 2};
    CHECK(aut_verify(z, aut_identity(z), w).ok());
    CHECK(aut_verify(z, flip(z, z.scalar(7)), w).ok());

    GammaConfig c2(2, {"g1", "g2"});
    std::vector<std::vector<int>> neg{{-1, 0}, {0, -1}};
    AutElement a{Character(c2, {Scalar::generator(2, 0), c2.scalar(rat(2, 3))}),
                 ScaleMap(c2, c2.scalar(-1), neg)};
    CHECK(aut_verify(c2, a, Window{2, 2}).ok());
}

TEST_CASE("the corrupted exponent breaks bracket preservation at once") {
    GammaConfig z = GammaConfig::integers();
    // exponent -i instead of -i-1
    Scalar c = z.scalar(-1);
    auto corrupt_apply = [&](const Element& x) {
        Element out;
        for (const auto& [idx, coeff] : x.terms())
            out.add_term({-idx.degree, idx.level}, coeff * c.pow(-idx.level));
        return out;
    };
    Element x = L(z, 1, 0), y = L(z, 0, 1);
    Element lhs = corrupt_apply(bracket(z, x, y, BracketRule::wgamma()));
    Element rhs = bracket(z, corrupt_apply(x), corrupt_apply(y), BracketRule::wgamma());
    CHECK(lhs != rhs);
}

TEST_CASE("inverse composes to the identity") {
    GammaConfig z = GammaConfig::integers();
    AutElement a = flip(z, z.scalar(rat(7, 4)));
    AutElement inv = aut_invert(z, a);
    CHECK(aut_compose(z, a, inv) == aut_identity(z));
    CHECK(aut_compose(z, inv, a) == aut_identity(z));
    CHECK(aut_invert(z, inv) == a);
    CHECK(aut_invert(z, aut_identity(z)) == aut_identity(z));
}

TEST_CASE("semidirect structure") {
    GammaConfig z = GammaConfig::integers();
    // characters compose pointwise at c = 1
    AutElement t1{Character(z, {z.scalar(2)}), ScaleMap::identity(z)};
    AutElement t2{Character(z, {z.scalar(5)}), ScaleMap::identity(z)};
    CHECK(aut_compose(z, t1, t2).tau.values()[0] == z.scalar(10));
    // scale part multiplies on its own
    AutElement s{Character::identity(z), ScaleMap(z, z.scalar(-1), {{-1}})};
    CHECK(aut_compose(z, s, s).c == ScaleMap::identity(z));
    // mixed law: (c tau)(alpha) = tau(c alpha)
    AutElement mixed = aut_compose(z, t1, s);
    AutElement mixed2 = aut_compose(z, s, t1);
    CHECK(mixed.tau.values()[0] == z.scalar(rat(1, 2)));  // tau1(-1) = 1/2
    CHECK(mixed2.tau.values()[0] == z.scalar(2));
}

TEST_CASE("automorphisms preserve the filtration level") {
    GammaConfig z = GammaConfig::integers();
    AutElement a = flip(z, z.scalar(3));
    Window w{2, 3};
    for (const auto& idx : window_basis(z, w)) {
        Element x = Element::basis(z, idx.degree, idx.level) +
                    Element::basis(z, idx.degree, idx.level + 1);
        CHECK(filtration_level(aut_apply(z, a, x)) == filtration_level(x));
    }
}

TEST_CASE("rigidity: fixing the generators forces the identity on the window") {
    GammaConfig z = GammaConfig::integers();
    auto identity_images = [&](const BasisIndex& idx) {
        return Element::basis(z, idx.degree, idx.level);
    };
    Window w{2, 4};
    for (const auto& idx : window_basis(z, w)) {
        Element img = endo_extension_image(z, identity_images, idx);
        CHECK(img == Element::basis(z, idx.degree, idx.level));
    }
}
