// The truncated exponential: promotion, dereliction, digging, Seely
// isomorphisms, weakening/contraction, and coKleisli composition.

#include <gtest/gtest.h>

#include <cohtaylor/exponential.hpp>

namespace ct = cohtaylor;
using ct::Errc;
using ct::Model;
using ct::Mor;
using ct::Obj;
using ct::Point;
using ct::Scalar;
using ct::Status;

namespace {

Scalar rat(long num, long den = 1) {
  return ct::scalar_from_ratio(ct::Semiring::RatPos, mpq_class(num, den));
}

Point A = Point::mk_atom("a");
Point B = Point::mk_atom("b");
Point C = Point::mk_atom("c");
Point X = Point::mk_atom("x");

Point bag(std::vector<Point> ps) { return Point::mk_bag(std::move(ps)); }

}  // namespace

TEST(ExponentialTest, PromotionAgainstHandMatrix) {
  Obj ab = Obj::atoms(Model::WRelRat, {"a", "b"});
  Obj c = Obj::atoms(Model::WRelRat, {"c"});
  Mor f(ab, c);
  f.set_entry(A, C, rat(2));
  f.set_entry(B, C, rat(3));

  Mor bf = ct::bang_mor(f, 2);
  EXPECT_EQ(bf.dom, Obj::bang(ab, 2));
  EXPECT_EQ(bf.cod, Obj::bang(c, 2));
  ASSERT_EQ(bf.e.size(), 6u);
  EXPECT_EQ(bf.at(bag({}), bag({})), rat(1));
  EXPECT_EQ(bf.at(bag({A}), bag({C})), rat(2));
  EXPECT_EQ(bf.at(bag({B}), bag({C})), rat(3));
  EXPECT_EQ(bf.at(bag({A, A}), bag({C, C})), rat(4));
  // Mixed bag: 2*3 entries times the transport multinomial 2!/(1!1!).
  EXPECT_EQ(bf.at(bag({A, B}), bag({C, C})), rat(12));
  EXPECT_EQ(bf.at(bag({B, B}), bag({C, C})), rat(9));

  // Functoriality on the same data.
  Mor g(c, ab);
  g.set_entry(C, A, rat(1, 2));
  g.set_entry(C, B, rat(5));
  EXPECT_EQ(ct::bang_mor(ct::compose(g, f), 2),
            ct::compose(ct::bang_mor(g, 2), ct::bang_mor(f, 2)));
  EXPECT_EQ(ct::bang_mor(ct::identity(ab), 2), ct::identity(Obj::bang(ab, 2)));
}

TEST(ExponentialTest, PromotionRespectsCliqueWebs) {
  // Incoherent atoms: no mixed bag exists, so the mixed transport is dropped.
  Obj dom = Obj::atoms(Model::Coh, {"a", "b"},
                       {Status::Neutral, Status::SIncoh, Status::SIncoh, Status::Neutral});
  Obj cod = Obj::atoms(Model::Coh, {"x"}, {Status::Neutral});
  Mor f(dom, cod);
  f.set_entry(A, X, ct::scalar_one(ct::Semiring::Bool));
  f.set_entry(B, X, ct::scalar_one(ct::Semiring::Bool));
  ASSERT_TRUE(ct::validate(f).ok);

  Mor bf = ct::bang_mor(f, 2);
  EXPECT_EQ(bf.e.size(), 5u);
  EXPECT_TRUE(bf.e.find({bag({A, B}), bag({X, X})}) == bf.e.end());
  EXPECT_TRUE(ct::validate(bf).ok);
}

TEST(ExponentialTest, DerictionAndDigging) {
  Obj a1 = Obj::atoms(Model::WRelRat, {"a"});

  Mor der = ct::der_mor(a1, 2);
  ASSERT_EQ(der.e.size(), 1u);
  EXPECT_EQ(der.at(bag({A}), A), rat(1));

  // Digging splits a bag into every multiset of blocks, padded with empties
  // up to the block cap; all weights are 1.
  Mor dig = ct::dig_mor(a1, 2);
  EXPECT_EQ(dig.e.size(), 8u);
  EXPECT_EQ(dig.at(bag({}), bag({})), rat(1));
  EXPECT_EQ(dig.at(bag({}), bag({bag({})})), rat(1));
  EXPECT_EQ(dig.at(bag({}), bag({bag({}), bag({})})), rat(1));
  EXPECT_EQ(dig.at(bag({A}), bag({bag({A})})), rat(1));
  EXPECT_EQ(dig.at(bag({A}), bag({bag({}), bag({A})})), rat(1));
  EXPECT_EQ(dig.at(bag({A, A}), bag({bag({A, A})})), rat(1));
  EXPECT_EQ(dig.at(bag({A, A}), bag({bag({}), bag({A, A})})), rat(1));
  EXPECT_EQ(dig.at(bag({A, A}), bag({bag({A}), bag({A})})), rat(1));

  // Counit laws of the comonad on a concrete object.
  Obj ab = Obj::atoms(Model::WRelRat, {"a", "b"});
  Obj bab = Obj::bang(ab, 2);
  EXPECT_EQ(ct::compose(ct::der_mor(bab, 2), ct::dig_mor(ab, 2)), ct::identity(bab));
  EXPECT_EQ(ct::compose(ct::bang_mor(ct::der_mor(ab, 2), 2), ct::dig_mor(ab, 2)),
            ct::identity(bab));
}

TEST(ExponentialTest, SeelyIsomorphisms) {
  Obj x = Obj::atoms(Model::WRelRat, {"a"});
  Obj y = Obj::atoms(Model::WRelRat, {"b"});
  unsigned long d = 2;

  // The unit part is a genuine iso: both webs are singletons.
  EXPECT_EQ(ct::compose(ct::seely0_inv_mor(Model::WRelRat, d), ct::seely0_mor(Model::WRelRat, d)),
            ct::identity(Obj::unit(Model::WRelRat)));
  EXPECT_EQ(ct::compose(ct::seely0_mor(Model::WRelRat, d), ct::seely0_inv_mor(Model::WRelRat, d)),
            ct::identity(Obj::bang(ct::top_obj(Model::WRelRat), d)));

  // Splitting a bag over X & Y is total, so this direction is the identity.
  Mor s2 = ct::seely2_mor(x, y, d);
  Mor s2i = ct::seely2_inv_mor(x, y, d);
  EXPECT_EQ(ct::compose(s2, s2i), ct::identity(s2.cod));

  // The other direction is the identity exactly on pairs whose total size
  // fits under the bag cap; over-cap pairs are annihilated.
  Mor round = ct::compose(s2i, s2);
  Mor partial(s2.dom, s2.dom);
  for (const auto& p : s2.dom.web())
    if (p.kids[0].kids.size() + p.kids[1].kids.size() <= d)
      partial.set_entry(p, p, rat(1));
  EXPECT_EQ(round, partial);
  EXPECT_NE(round, ct::identity(s2.dom));
}

TEST(ExponentialTest, LaxMonoidality) {
  Obj x = Obj::atoms(Model::WRelRat, {"a", "b"});
  Obj y = Obj::atoms(Model::WRelRat, {"x"});
  Point Yx = Point::mk_atom("x");

  Mor mz = ct::ocmonz_mor(Model::WRelRat, 2);
  EXPECT_EQ(mz.e.size(), 3u);  // one bag of stars per size 0..2

  Mor mt = ct::ocmont_mor(x, y, 2);
  // ([a,b],[x,x]) admits exactly one transport; weights stay 0/1.
  Point dom_pt = Point::mk_pair(bag({A, B}), bag({Yx, Yx}));
  Point cod_pt = bag({Point::mk_pair(A, Yx), Point::mk_pair(B, Yx)});
  EXPECT_EQ(mt.at(dom_pt, cod_pt), rat(1));
  // Mismatched sizes never zip.
  EXPECT_EQ(mt.at(Point::mk_pair(bag({A}), bag({})), bag({})),
            ct::scalar_zero(ct::Semiring::RatPos));
  for (const auto& [pq, v] : mt.e) EXPECT_EQ(v, rat(1));
}

TEST(ExponentialTest, WeakeningAndContraction) {
  Obj x = Obj::atoms(Model::WRelRat, {"a", "b"});

  Mor w = ct::weak_mor(x, 2);
  ASSERT_EQ(w.e.size(), 1u);
  EXPECT_EQ(w.at(bag({}), Point::mk_unit()), rat(1));

  // Contraction sends a bag to every two-part split, all with weight 1: the
  // tags inside !(X & X) make each transport unique, so the multinomial
  // coefficients all collapse.
  Mor c = ct::contr_mor(x, 2);
  EXPECT_EQ(c.at(bag({A, A}), Point::mk_pair(bag({A, A}), bag({}))), rat(1));
  EXPECT_EQ(c.at(bag({A, A}), Point::mk_pair(bag({A}), bag({A}))), rat(1));
  EXPECT_EQ(c.at(bag({A, A}), Point::mk_pair(bag({}), bag({A, A}))), rat(1));
  EXPECT_EQ(c.at(bag({A, B}), Point::mk_pair(bag({A}), bag({B}))), rat(1));
  for (const auto& [pq, v] : c.e) EXPECT_EQ(v, rat(1));

  // Discarding one copy after contraction is the identity.
  Mor keep_left = ct::compose(ct::unitr_mor(Obj::bang(x, 2)),
                              ct::tensor_mor(ct::identity(Obj::bang(x, 2)), ct::weak_mor(x, 2)));
  EXPECT_EQ(ct::compose(keep_left, c), ct::identity(Obj::bang(x, 2)));
}

TEST(ExponentialTest, KleisliCompositionIsSeriesComposition) {
  // f(x) = 3 + 2x and g(y) = 5 + 7y + 11y^2 as coKleisli maps; their
  // composite must carry the coefficients of g(f(x)) = 125 + 146x + 44x^2.
  Obj xo = Obj::atoms(Model::WRelRat, {"a"});
  Obj yo = Obj::atoms(Model::WRelRat, {"b"});
  Obj zo = Obj::atoms(Model::WRelRat, {"c"});

  Mor f(Obj::bang(xo, 2), yo);
  f.set_entry(bag({}), B, rat(3));
  f.set_entry(bag({A}), B, rat(2));
  Mor g(Obj::bang(yo, 2), zo);
  g.set_entry(bag({}), C, rat(5));
  g.set_entry(bag({B}), C, rat(7));
  g.set_entry(bag({B, B}), C, rat(11));

  Mor gf = ct::kleisli_compose(g, f);
  ASSERT_EQ(gf.e.size(), 3u);
  EXPECT_EQ(gf.at(bag({}), C), rat(125));
  EXPECT_EQ(gf.at(bag({A}), C), rat(146));
  EXPECT_EQ(gf.at(bag({A, A}), C), rat(44));

  // coKleisli units on both sides.
  EXPECT_EQ(ct::kleisli_compose(f, ct::kleisli_identity(xo, 2)), f);
  EXPECT_EQ(ct::kleisli_compose(ct::kleisli_identity(yo, 2), f), f);

  // Shape errors are type errors.
  try {
    ct::kleisli_compose(g, ct::identity(yo));
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
  Mor f3(Obj::bang(xo, 3), yo);
  f3.set_entry(bag({}), B, rat(3));
  try {
    ct::kleisli_compose(g, f3);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}
