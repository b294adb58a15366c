// The degrees bimonoid D and the summability structure S X = D -o X.

#include <gtest/gtest.h>

#include <cohtaylor/summability.hpp>

namespace ct = cohtaylor;
using ct::Errc;
using ct::Model;
using ct::Mor;
using ct::Obj;
using ct::Point;
using ct::Scalar;

namespace {

Point A = Point::mk_atom("a");
Point B = Point::mk_atom("b");
Point dg(unsigned long n) { return Point::mk_deg(n); }
Point sp(unsigned long i, Point p) { return Point::mk_pair(dg(i), std::move(p)); }

}  // namespace

TEST(SummabilityTest, DegreesBimonoid) {
  Model m = Model::WRelNat;
  Scalar one = ct::scalar_one(ct::Semiring::NatInf);
  Obj d = Obj::degrees(m, 2);

  EXPECT_EQ(ct::w_mor(m, 2, 1).at(Point::mk_unit(), dg(1)), one);
  EXPECT_EQ(ct::diag_mor(m, 2).e.size(), 3u);
  EXPECT_EQ(ct::counit_d_mor(m, 2).e.size(), 1u);
  EXPECT_EQ(ct::wproj_mor(m, 2, 2).at(dg(2), Point::mk_unit()), one);

  // Comultiplication splits n into ordered pairs: 1 + 2 + 3 entries at cap 2.
  Mor com = ct::comult_d_mor(m, 2);
  EXPECT_EQ(com.e.size(), 6u);
  EXPECT_EQ(com.at(dg(2), Point::mk_pair(dg(1), dg(1))), one);
  EXPECT_EQ(com.at(dg(2), Point::mk_pair(dg(0), dg(2))), one);
  Mor mul = ct::mult_d_mor(m, 2);
  EXPECT_EQ(mul.e.size(), 3u);
  EXPECT_EQ(mul.at(Point::mk_pair(dg(1), dg(1)), dg(1)), one);
  EXPECT_TRUE(mul.e.find({Point::mk_pair(dg(0), dg(1)), dg(0)}) == mul.e.end());

  // Counit and coassociativity of the comultiplication.
  EXPECT_EQ(ct::compose(ct::tensor_mor(ct::counit_d_mor(m, 2), ct::identity(d)), com),
            ct::unitl_inv_mor(d));
  EXPECT_EQ(ct::compose(ct::tensor_mor(com, ct::identity(d)), com),
            ct::compose(ct::assoc_inv_mor(d, d, d),
                        ct::compose(ct::tensor_mor(ct::identity(d), com), com)));

  // The diagonal is the unit of the multiplication.
  EXPECT_EQ(ct::compose(mul, ct::compose(ct::tensor_mor(ct::diag_mor(m, 2), ct::identity(d)),
                                         ct::unitl_inv_mor(d))),
            ct::identity(d));

  try {
    ct::w_mor(m, 2, 3);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(SummabilityTest, FunctorActionIsBlockDiagonal) {
  Obj ab = Obj::atoms(Model::WRelNat, {"a", "b"});
  Scalar two = ct::scalar_from_nat(ct::Semiring::NatInf, 2);
  Mor f(ab, ab);
  f.set_entry(A, B, two);

  Mor sf = ct::s_mor(f, 3);
  EXPECT_EQ(sf.e.size(), 4u);
  for (unsigned long i = 0; i <= 3; ++i) EXPECT_EQ(sf.at(sp(i, A), sp(i, B)), two);

  Mor g(ab, ab);
  g.set_entry(B, A, two);
  EXPECT_EQ(ct::s_mor(ct::compose(g, f), 3), ct::compose(ct::s_mor(g, 3), ct::s_mor(f, 3)));
  EXPECT_EQ(ct::s_mor(ct::identity(ab), 3), ct::identity(Obj::s_of(ab, 3)));
}

TEST(SummabilityTest, ProjectionInjectionPairing) {
  Obj ab = Obj::atoms(Model::WRelNat, {"a", "b"});
  for (unsigned long i = 0; i <= 2; ++i)
    for (unsigned long j = 0; j <= 2; ++j) {
      Mor pij = ct::compose(ct::sproj_mor(ab, 2, i), ct::sinj_mor(ab, 2, j));
      if (i == j) {
        EXPECT_EQ(pij, ct::identity(ab));
      } else {
        EXPECT_EQ(pij, ct::zero_mor(ab, ab));
      }
    }

  // sigma collapses every degree, so each injection is a section of it.
  Mor sigma = ct::sigma_mor(ab, 2);
  EXPECT_EQ(sigma.e.size(), 6u);
  for (unsigned long i = 0; i <= 2; ++i)
    EXPECT_EQ(ct::compose(sigma, ct::sinj_mor(ab, 2, i)), ct::identity(ab));

  // The projection family stays summable in coherence spaces too.
  Obj c = Obj::atoms(Model::Coh, {"a", "b"},
                     {ct::Status::Neutral, ct::Status::SCoh, ct::Status::SCoh, ct::Status::Neutral});
  EXPECT_EQ(ct::sigma_mor(c, 2).e.size(), 6u);
  EXPECT_TRUE(ct::validate(ct::sigma_mor(c, 2)).ok);
  EXPECT_TRUE(ct::validate(ct::theta_mor(c, 2)).ok);
  EXPECT_TRUE(ct::validate(ct::lift_mor(c, 2)).ok);
}

TEST(SummabilityTest, MonadStructure) {
  Obj a1 = Obj::atoms(Model::WRelNat, {"a"});
  Obj sx = Obj::s_of(a1, 2);
  Scalar one = ct::scalar_one(ct::Semiring::NatInf);

  // theta adds degrees and silently drops overflow: pairs with i+j <= 2.
  Mor th = ct::theta_mor(a1, 2);
  EXPECT_EQ(th.e.size(), 6u);
  EXPECT_EQ(th.at(sp(1, sp(1, A)), sp(2, A)), one);
  EXPECT_TRUE(th.e.find({sp(2, sp(1, A)), sp(2, A)}) == th.e.end());

  // Unit laws: inserting at degree 0 outside or inside is cancelled by theta.
  EXPECT_EQ(ct::compose(th, ct::sinj_mor(sx, 2, 0)), ct::identity(sx));
  EXPECT_EQ(ct::compose(th, ct::s_mor(ct::sinj_mor(a1, 2, 0), 2)), ct::identity(sx));

  // Associativity is exact: both sides keep exactly the triples with
  // i + j + k under the bound.
  EXPECT_EQ(ct::compose(th, ct::theta_mor(sx, 2)), ct::compose(th, ct::s_mor(th, 2)));
}

TEST(SummabilityTest, ComonadAndSwapStructure) {
  Obj ab = Obj::atoms(Model::WRelNat, {"a", "b"});
  Obj sx = Obj::s_of(ab, 2);
  Mor l = ct::lift_mor(ab, 2);
  Scalar one = ct::scalar_one(ct::Semiring::NatInf);

  EXPECT_EQ(l.at(sp(1, A), sp(1, sp(1, A))), one);
  EXPECT_EQ(l.e.size(), 6u);

  // sigma is the counit of the lift comonad, and lifting is coassociative.
  EXPECT_EQ(ct::compose(ct::sigma_mor(sx, 2), l), ct::identity(sx));
  EXPECT_EQ(ct::compose(ct::s_mor(l, 2), l), ct::compose(ct::lift_mor(sx, 2), l));

  // The degree swap is an involution that theta absorbs.
  Mor c = ct::sswap_mor(ab, 2);
  EXPECT_EQ(ct::compose(c, c), ct::identity(Obj::s_of(sx, 2)));
  EXPECT_EQ(ct::compose(ct::theta_mor(ab, 2), c), ct::theta_mor(ab, 2));
}

TEST(SummabilityTest, StrengthsAndDistribution) {
  Obj x = Obj::atoms(Model::WRelRat, {"a"});
  Obj y = Obj::atoms(Model::WRelRat, {"b"});

  // sdist adds degrees; the strengths are its degree-zero specialisations.
  Mor dist = ct::sdist_mor(x, y, 2);
  EXPECT_EQ(dist.at(Point::mk_pair(sp(1, A), sp(1, B)), sp(2, Point::mk_pair(A, B))),
            ct::scalar_one(ct::Semiring::RatPos));
  EXPECT_EQ(ct::sstr_l_mor(x, y, 2),
            ct::compose(dist, ct::tensor_mor(ct::identity(Obj::s_of(x, 2)),
                                             ct::sinj_mor(y, 2, 0))));
  EXPECT_EQ(ct::sstr_r_mor(x, y, 2),
            ct::compose(dist, ct::tensor_mor(ct::sinj_mor(x, 2, 0),
                                             ct::identity(Obj::s_of(y, 2)))));
}

TEST(SummabilityTest, ProductDistributionIsIso) {
  Obj x = Obj::atoms(Model::Rel, {"a"});
  Obj y = Obj::atoms(Model::Rel, {"b", "c"});
  Obj w = Obj::with(Model::Rel, {x, y});

  Mor fwd = ct::sproddist_mor(w, 2);
  Mor inv = ct::sproddist_inv_mor(w, 2);
  EXPECT_EQ(ct::compose(inv, fwd), ct::identity(Obj::s_of(w, 2)));
  EXPECT_EQ(ct::compose(fwd, inv), ct::identity(fwd.cod));

  try {
    ct::sproddist_mor(x, 2);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(SummabilityTest, WitnessOfSummableFamilies) {
  Obj ab = Obj::atoms(Model::WRelNat, {"a", "b"});
  Scalar one = ct::scalar_one(ct::Semiring::NatInf);
  Mor f0(ab, ab), f1(ab, ab);
  f0.set_entry(A, A, one);
  f1.set_entry(A, B, one);

  auto h = ct::witness_mor({f0, f1}, 2);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->e.size(), 2u);
  EXPECT_EQ(h->at(A, sp(0, A)), one);
  EXPECT_EQ(h->at(A, sp(1, B)), one);
  // Recovering each member through the projections.
  EXPECT_EQ(ct::compose(ct::sproj_mor(ab, 2, 0), *h), f0);
  EXPECT_EQ(ct::compose(ct::sproj_mor(ab, 2, 1), *h), f1);

  // A non-summable family has no witness.
  Obj cp = Obj::atoms(Model::Coh, {"a", "b"},
                      {ct::Status::Neutral, ct::Status::SCoh, ct::Status::SCoh, ct::Status::Neutral});
  Mor g(cp, cp);
  g.set_entry(A, A, ct::scalar_one(ct::Semiring::Bool));
  std::string why;
  EXPECT_FALSE(ct::witness_mor({g, g}, 2, &why).has_value());
  EXPECT_FALSE(why.empty());

  try {
    ct::witness_mor({f0, f1, f0, f1}, 2);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}
