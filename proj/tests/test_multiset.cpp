#include <cohtaylor/multiset.hpp>

#include <gtest/gtest.h>

using namespace cohtaylor;

namespace {

Point A() { return Point::mk_atom("a"); }
Point B() { return Point::mk_atom("b"); }
Point C() { return Point::mk_atom("c"); }
Point D() { return Point::mk_atom("d"); }

TEST(Multiset, Factorials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(Multiset, BasicOps) {
  Multiset m = Multiset::from_vector({A(), B(), A()});
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.count(A()), 2u);
  EXPECT_EQ(m.count(B()), 1u);
  EXPECT_EQ(m.count(C()), 0u);
  EXPECT_EQ(m.fact(), 2);  // 2! * 1!
  EXPECT_EQ(point_text(m.to_bag_point()), "(bag a a b)");
  EXPECT_EQ(Multiset::from_bag_point(m.to_bag_point()), m);
}

TEST(Multiset, TransportsSquareCases) {
  // [a,a] vs [b,c]: one contingency table (a->b:1, a->c:1).
  auto t1 = transports(Multiset::from_vector({A(), A()}), Multiset::from_vector({B(), C()}));
  ASSERT_EQ(t1.size(), 1u);
  Transport want1{{{A(), B()}, 1}, {{A(), C()}, 1}};
  EXPECT_EQ(t1[0], want1);

  // [a,a] vs [b,b]: the single doubled cell.
  auto t2 = transports(Multiset::from_vector({A(), A()}), Multiset::from_vector({B(), B()}));
  ASSERT_EQ(t2.size(), 1u);
  Transport want2{{{A(), B()}, 2}};
  EXPECT_EQ(t2[0], want2);

  // [a,b] vs [c,d]: the two bijections.
  auto t3 = transports(Multiset::from_vector({A(), B()}), Multiset::from_vector({C(), D()}));
  EXPECT_EQ(t3.size(), 2u);

  // Size mismatch: none.
  EXPECT_TRUE(transports(Multiset::from_vector({A()}), Multiset::from_vector({B(), B()})).empty());

  // Empty vs empty: the empty transport.
  EXPECT_EQ(transports(Multiset{}, Multiset{}).size(), 1u);
}

TEST(Multiset, GeneralizedMultinomials) {
  // [p r] = p! / prod r!
  Multiset p_cc = Multiset::from_vector({C(), C()});
  Transport collapse{{{A(), C()}, 1}, {{B(), C()}, 1}};
  EXPECT_EQ(multinomb(p_cc, collapse), 2);  // 2!/(1!1!)
  Transport doubled{{{A(), C()}, 2}};
  EXPECT_EQ(multinomb(p_cc, doubled), 1);  // 2!/2!
  EXPECT_EQ(multinomb(Multiset{}, Transport{}), 1);

  // L(m_1..m_k): merged factorial over the product of the parts'.
  EXPECT_EQ(multinom({Multiset::from_vector({A()}), Multiset::from_vector({A()}),
                      Multiset::from_vector({B()})}),
            2);  // [a,a,b]! = 2, parts contribute 1
  EXPECT_EQ(multinom({}), 1);
}

TEST(Multiset, DegreePartitions) {
  EXPECT_EQ(mpart(0).size(), 1u);  // the empty partition
  EXPECT_TRUE(mpart(0)[0].empty());
  EXPECT_EQ(mpart(3).size(), 3u);  // 3, 2+1, 1+1+1
  EXPECT_EQ(mpart(4).size(), 5u);
  EXPECT_EQ(mpart(5).size(), 7u);
  auto only_ones = mpart(3, 1);
  ASSERT_EQ(only_ones.size(), 1u);
  EXPECT_EQ(only_ones[0].at(1), 3u);
  for (const auto& mu : mpart(4)) {
    unsigned long total = 0;
    for (const auto& [i, c] : mu) total += i * c;
    EXPECT_EQ(total, 4u);
  }
}

TEST(Multiset, NatMultisetFactorial) {
  NatMultiset m{{1, 2}, {2, 1}};
  EXPECT_EQ(nat_multiset_fact(m), 2);  // 2! * 1!
  EXPECT_EQ(nat_multiset_fact(NatMultiset{}), 1);
}

}  // namespace
