// The Taylor distributive law, the Taylor functor, homogeneous components,
// the degrees/bang(1) isomorphism, and the negative search.

#include <gtest/gtest.h>

#include <cohtaylor/taylor.hpp>

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
Point bag(std::vector<Point> ps) { return Point::mk_bag(std::move(ps)); }
Point dp(unsigned long i, Point p) { return Point::mk_pair(Point::mk_deg(i), std::move(p)); }
Point sn(unsigned long n, Point p) { return Point::mk_pair(Point::mk_deg(n), std::move(p)); }

// f(x) = 3 + x^2/2 as a coKleisli morphism over {a, b} (value read at b,
// argument read at a).
Mor quad_series(unsigned long d) {
  Obj ab = Obj::atoms(Model::WRelRat, {"a", "b"});
  Mor s(Obj::bang(ab, d), ab);
  s.set_entry(bag({}), A, rat(3));
  s.set_entry(bag({A, A}), B, rat(1, 2));
  return s;
}

}  // namespace

TEST(TaylorTest, DegreeCoalgebraAgainstHandMatrix) {
  Mor co = ct::coalgebra_d_mor(Model::WRelRat, 2, 2);
  // Bags of degrees of size <= 2 summing to n: three for n=0, two for n=1,
  // three for n=2.
  EXPECT_EQ(co.e.size(), 8u);
  Point d0 = Point::mk_deg(0), d1 = Point::mk_deg(1), d2 = Point::mk_deg(2);
  EXPECT_EQ(co.at(d0, bag({})), rat(1));
  EXPECT_EQ(co.at(d0, bag({d0, d0})), rat(1));
  EXPECT_EQ(co.at(d1, bag({d0, d1})), rat(1));
  EXPECT_EQ(co.at(d2, bag({d1, d1})), rat(1));
  EXPECT_EQ(co.at(d2, bag({d2})), rat(1));
  for (const auto& [pq, v] : co.e) EXPECT_EQ(v, rat(1));
}

TEST(TaylorTest, DistributiveLawAgainstHandMatrix) {
  Obj a1 = Obj::atoms(Model::WRelRat, {"a"});
  Mor sdl = ct::sdl_explicit_mor(a1, 2, 2);

  EXPECT_EQ(sdl.dom, Obj::bang(Obj::s_of(a1, 2), 2));
  EXPECT_EQ(sdl.cod, Obj::s_of(Obj::bang(a1, 2), 2));
  // One empty bag, three singletons, four two-element decorations.
  ASSERT_EQ(sdl.e.size(), 8u);
  EXPECT_EQ(sdl.at(bag({}), sn(0, bag({}))), rat(1));
  EXPECT_EQ(sdl.at(bag({dp(2, A)}), sn(2, bag({A}))), rat(1));
  // Distinct degrees pick up the multiset factor m!/p! = 2.
  EXPECT_EQ(sdl.at(bag({dp(0, A), dp(1, A)}), sn(1, bag({A, A}))), rat(2));
  EXPECT_EQ(sdl.at(bag({dp(0, A), dp(2, A)}), sn(2, bag({A, A}))), rat(2));
  EXPECT_EQ(sdl.at(bag({dp(1, A), dp(1, A)}), sn(2, bag({A, A}))), rat(1));
  EXPECT_EQ(sdl.at(bag({dp(0, A), dp(0, A)}), sn(0, bag({A, A}))), rat(1));
}

TEST(TaylorTest, ExplicitAndPipelineLawsAgree) {
  Obj a1 = Obj::atoms(Model::WRelRat, {"a"});
  Obj ab = Obj::atoms(Model::Rel, {"a", "b"});
  for (unsigned long d = 1; d <= 3; ++d)
    for (unsigned long dmax = 1; dmax <= 3; ++dmax)
      EXPECT_EQ(ct::sdl_explicit_mor(a1, d, dmax), ct::sdl_pipeline_mor(a1, d, dmax))
          << "d=" << d << " dmax=" << dmax;
  EXPECT_EQ(ct::sdl_explicit_mor(ab, 2, 2), ct::sdl_pipeline_mor(ab, 2, 2));

  Obj cp = Obj::atoms(Model::Coh, {"a", "b"},
                      {Status::Neutral, Status::SIncoh, Status::SIncoh, Status::Neutral});
  EXPECT_EQ(ct::sdl_explicit_mor(cp, 2, 2), ct::sdl_pipeline_mor(cp, 2, 2));
}

TEST(TaylorTest, TaylorFunctorAgainstHandMatrix) {
  Mor s = quad_series(3);
  Mor t = ct::taylor_functor_mor(s, 4);

  // One entry from the constant, nine from the quadratic: non-decreasing
  // degree pairs (i1,i2) with i1+i2 <= 4.
  ASSERT_EQ(t.e.size(), 10u);
  EXPECT_EQ(t.at(bag({}), sn(0, A)), rat(3));
  EXPECT_EQ(t.at(bag({dp(0, A), dp(0, A)}), sn(0, B)), rat(1, 2));
  EXPECT_EQ(t.at(bag({dp(1, A), dp(1, A)}), sn(2, B)), rat(1, 2));
  EXPECT_EQ(t.at(bag({dp(2, A), dp(2, A)}), sn(4, B)), rat(1, 2));
  EXPECT_EQ(t.at(bag({dp(0, A), dp(1, A)}), sn(1, B)), rat(1));
  EXPECT_EQ(t.at(bag({dp(1, A), dp(3, A)}), sn(4, B)), rat(1));

  // The two independent computations of the functor coincide.
  EXPECT_EQ(ct::taylor_via_sdl_mor(s, 4, true), t);
  EXPECT_EQ(ct::taylor_via_sdl_mor(s, 4, false), t);

  try {
    ct::taylor_functor_mor(ct::identity(s.cod), 4);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(TaylorTest, CliqueWebsCollapseTheLaw) {
  // Same quadratic entry over three models. In coherence spaces the two
  // argument copies must sit at one degree, elsewhere all splits survive.
  auto support = [](Model m) {
    std::vector<Status> mat;
    if (m == Model::Coh) mat = {Status::Neutral};
    if (m == Model::Wcs) mat = {Status::SCoh};
    Obj a1 = Obj::atoms(m, {"a"}, mat);
    Obj b1 = m == Model::Coh   ? Obj::atoms(m, {"b"}, {Status::Neutral})
             : m == Model::Wcs ? Obj::atoms(m, {"b"}, {Status::SCoh})
                               : Obj::atoms(m, {"b"});
    Mor s(Obj::bang(a1, 2), b1);
    s.set_entry(bag({A, A}), B, ct::scalar_one(ct::model_semiring(m)));
    std::set<std::pair<Point, Point>> supp;
    for (const auto& [pq, v] : ct::taylor_functor_mor(s, 4).e) supp.insert(pq);
    return supp;
  };

  std::set<std::pair<Point, Point>> diag, all;
  for (unsigned long i = 0; i * 2 <= 4; ++i)
    diag.insert({bag({dp(i, A), dp(i, A)}), sn(2 * i, B)});
  for (unsigned long i = 0; i <= 4; ++i)
    for (unsigned long j = i; i + j <= 4; ++j)
      all.insert({bag({dp(i, A), dp(j, A)}), sn(i + j, B)});

  EXPECT_EQ(support(Model::Coh), diag);
  EXPECT_EQ(support(Model::Wcs), all);
  EXPECT_EQ(support(Model::Rel), all);
  EXPECT_EQ(diag.size(), 3u);
  EXPECT_EQ(all.size(), 9u);
}

TEST(TaylorTest, HomogeneousComponents) {
  Mor s = quad_series(3);

  Mor h0 = ct::homogeneous_mor(s, 0, 4);
  ASSERT_EQ(h0.e.size(), 1u);
  EXPECT_EQ(h0.at(bag({}), A), rat(3));

  EXPECT_EQ(ct::homogeneous_mor(s, 1, 4), ct::zero_mor(s.dom, s.cod));

  Mor h2 = ct::homogeneous_mor(s, 2, 4);
  ASSERT_EQ(h2.e.size(), 1u);
  EXPECT_EQ(h2.at(bag({A, A}), B), rat(1, 2));

  // The homogeneous pieces partition the morphism.
  std::vector<Mor> pieces;
  for (unsigned long n = 0; n <= 4; ++n) pieces.push_back(ct::homogeneous_mor(s, n, 4));
  EXPECT_EQ(ct::partial_sum_checked(pieces), s);

  try {
    ct::homogeneous_mor(s, 5, 4);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(TaylorTest, DegreesBangIsomorphism) {
  for (unsigned long d = 1; d <= 3; ++d) {
    auto [fwd, inv] = ct::deg_iso_mor(Model::WRelRat, d, d);
    EXPECT_EQ(ct::compose(fwd, inv), ct::identity(Obj::degrees(Model::WRelRat, d))) << d;
    EXPECT_EQ(ct::compose(inv, fwd), ct::identity(Obj::bang(Obj::unit(Model::WRelRat), d))) << d;
    EXPECT_TRUE(ct::validate(fwd).ok);
    EXPECT_TRUE(ct::validate(inv).ok);
  }
  auto [fwd, inv] = ct::deg_iso_mor(Model::Rel, 2, 2);
  EXPECT_EQ(ct::compose(fwd, inv), ct::identity(Obj::degrees(Model::Rel, 2)));

  try {
    ct::deg_iso_mor(Model::Rel, 2, 0);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(TaylorTest, AlternativeExponentialStatuses) {
  // Over the one-point space every pair of bags is mutually neutral: no
  // element can strictly dominate.
  Obj one = Obj::unit(Model::Nucs);
  Obj be = ct::ocbe_obj(one, 2);
  EXPECT_EQ(be.web().size(), 3u);
  Point e0 = bag({}), e1 = bag({Point::mk_unit()});
  EXPECT_EQ(be.status(e1, e1), Status::Neutral);
  EXPECT_EQ(be.status(e0, e1), Status::Neutral);

  try {
    ct::ocbe_obj(Obj::unit(Model::Rel), 2);
    FAIL() << "expected a type error";
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, Errc::Type);
  }
}

TEST(TaylorTest, DegreeObjectIsNotTheAlternativeExponential) {
  // At cap 1 the two two-point webs match in two ways; from cap 2 on the
  // status profiles diverge and no bijection survives.
  EXPECT_EQ(ct::count_degree_ocbe_isos(1), 2u);
  EXPECT_EQ(ct::count_degree_ocbe_isos(2), 0u);
  EXPECT_EQ(ct::count_degree_ocbe_isos(3), 0u);
}
