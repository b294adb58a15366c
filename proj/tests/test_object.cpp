// Webs, coherence statuses, and the object constructors.

#include <gtest/gtest.h>

#include <cohtaylor/object.hpp>

namespace ct = cohtaylor;
using ct::Errc;
using ct::Model;
using ct::Obj;
using ct::Point;
using ct::Status;

namespace {

void expect_fail(Errc want, const std::function<void()>& body) {
  try {
    body();
    FAIL() << "expected an error of class " << static_cast<int>(want);
  } catch (const ct::Error& e) {
    EXPECT_EQ(e.code, want) << e.what();
  }
}

Obj rel_atoms(std::vector<std::string> names) { return Obj::atoms(Model::Rel, std::move(names)); }

// Two Coh atoms: diagonal neutral, off-diagonal either coherent or not.
Obj coh_pair(bool coherent) {
  Status off = coherent ? Status::SCoh : Status::SIncoh;
  return Obj::atoms(Model::Coh, {"a", "b"},
                    {Status::Neutral, off, off, Status::Neutral});
}

}  // namespace

TEST(ObjectTest, StatusAlgebraTables) {
  const Status S = Status::SCoh, N = Status::Neutral, I = Status::SIncoh;

  // E -o F: contravariant collapse in the first slot.
  EXPECT_EQ(ct::status_limpl(I, S), S);
  EXPECT_EQ(ct::status_limpl(I, N), S);
  EXPECT_EQ(ct::status_limpl(I, I), S);
  EXPECT_EQ(ct::status_limpl(S, S), S);
  EXPECT_EQ(ct::status_limpl(S, N), I);
  EXPECT_EQ(ct::status_limpl(S, I), I);
  EXPECT_EQ(ct::status_limpl(N, S), S);
  EXPECT_EQ(ct::status_limpl(N, N), N);
  EXPECT_EQ(ct::status_limpl(N, I), I);

  // E (x) F: incoherence dominates, neutrality needs both sides neutral.
  EXPECT_EQ(ct::status_tensor(S, S), S);
  EXPECT_EQ(ct::status_tensor(S, N), S);
  EXPECT_EQ(ct::status_tensor(N, S), S);
  EXPECT_EQ(ct::status_tensor(N, N), N);
  EXPECT_EQ(ct::status_tensor(I, S), I);
  EXPECT_EQ(ct::status_tensor(S, I), I);
  EXPECT_EQ(ct::status_tensor(I, N), I);
  EXPECT_EQ(ct::status_tensor(N, I), I);
  EXPECT_EQ(ct::status_tensor(I, I), I);

  EXPECT_TRUE(ct::status_coh(S));
  EXPECT_TRUE(ct::status_coh(N));
  EXPECT_FALSE(ct::status_coh(I));

  EXPECT_STREQ(ct::status_name(S), "scoh");
  EXPECT_STREQ(ct::status_name(N), "neutral");
  EXPECT_STREQ(ct::status_name(I), "sincoh");
}

TEST(ObjectTest, AtomConstructorValidation) {
  expect_fail(Errc::Type, [] { rel_atoms({"b", "a"}); });
  expect_fail(Errc::Type, [] { rel_atoms({"a", "a"}); });

  // Models with coherence demand a full symmetric matrix.
  expect_fail(Errc::Type, [] { Obj::atoms(Model::Wcs, {"a", "b"}, {Status::SCoh}); });
  expect_fail(Errc::Type, [] {
    Obj::atoms(Model::Wcs, {"a", "b"},
               {Status::SCoh, Status::SCoh, Status::SIncoh, Status::SCoh});
  });
  expect_fail(Errc::Type, [] {
    Obj::atoms(Model::Wcs, {"a", "b"},
               {Status::SCoh, Status::Neutral, Status::Neutral, Status::SCoh});
  });
  // Coherence-space atoms fix the diagonal to neutral and ban neutral off it.
  expect_fail(Errc::Type, [] {
    Obj::atoms(Model::Coh, {"a", "b"},
               {Status::SCoh, Status::SCoh, Status::SCoh, Status::SCoh});
  });
  expect_fail(Errc::Type, [] {
    Obj::atoms(Model::Coh, {"a", "b"},
               {Status::Neutral, Status::Neutral, Status::Neutral, Status::Neutral});
  });

  Obj c = coh_pair(true);
  EXPECT_EQ(c.status(Point::mk_atom("a"), Point::mk_atom("a")), Status::Neutral);
  EXPECT_EQ(c.status(Point::mk_atom("a"), Point::mk_atom("b")), Status::SCoh);

  // Models without coherence accept bare atom lists and report everything
  // coherent.
  Obj r = rel_atoms({"a", "b"});
  EXPECT_EQ(r.status(Point::mk_atom("a"), Point::mk_atom("b")), Status::SCoh);
  EXPECT_TRUE(r.coherent(Point::mk_atom("a"), Point::mk_atom("b")));
}

TEST(ObjectTest, WebEnumeration) {
  Obj two = rel_atoms({"a", "b"});
  Obj three = rel_atoms({"x", "y", "z"});

  EXPECT_EQ(two.web().size(), 2u);
  EXPECT_EQ(Obj::unit(Model::Rel).web(), std::vector<Point>{Point::mk_unit()});
  EXPECT_EQ(Obj::degrees(Model::Rel, 3).web().size(), 4u);
  EXPECT_EQ(Obj::tensor(two, three).web().size(), 6u);
  EXPECT_EQ(Obj::limpl(two, three).web().size(), 6u);
  EXPECT_EQ(Obj::with(Model::Rel, {two, three}).web().size(), 5u);
  EXPECT_EQ(Obj::plus(Model::Rel, {two, three}).web().size(), 5u);

  // Empty additive: the terminal object has an empty web.
  EXPECT_TRUE(Obj::with(Model::Rel, {}).web().empty());

  // Bags of size <= 2 over two points: [], [a], [b], [a,a], [a,b], [b,b].
  EXPECT_EQ(Obj::bang(two, 2).web().size(), 6u);
  // Bags over the unit: one per size.
  EXPECT_EQ(Obj::bang(Obj::unit(Model::Rel), 2).web().size(), 3u);

  // S X enumerates one copy of X per degree.
  Obj s = Obj::s_of(two, 3);
  EXPECT_TRUE(s.is_s_obj());
  EXPECT_EQ(s.s_bound(), 3u);
  EXPECT_EQ(s.web().size(), 8u);

  EXPECT_EQ(two.describe(), "{a,b}");
  EXPECT_EQ(Obj::unit(Model::Rel).describe(), "1");
  EXPECT_EQ(Obj::degrees(Model::Rel, 3).describe(), "D<=3");
  EXPECT_EQ(Obj::tensor(two, three).describe(), "({a,b} * {x,y,z})");
  EXPECT_EQ(s.describe(), "S{a,b}");
}

TEST(ObjectTest, CliqueRestrictedBags) {
  // In coherence spaces the bag web keeps only multisets whose support is a
  // clique, so an incoherent atom pair removes every mixed bag.
  EXPECT_EQ(Obj::bang(coh_pair(true), 2).web().size(), 6u);
  Obj banged = Obj::bang(coh_pair(false), 2);
  EXPECT_EQ(banged.web().size(), 5u);
  Point mixed = Point::mk_bag({Point::mk_atom("a"), Point::mk_atom("b")});
  EXPECT_FALSE(banged.contains(mixed));
  EXPECT_TRUE(banged.contains(Point::mk_bag({Point::mk_atom("a"), Point::mk_atom("a")})));
}

TEST(ObjectTest, BangStatuses) {
  Point a = Point::mk_atom("a"), b = Point::mk_atom("b");
  Point ba = Point::mk_bag({a}), bb = Point::mk_bag({b});
  Point bab = Point::mk_bag({a, b});

  // Coherence spaces: neutral exactly on equal bags.
  Obj ec = Obj::bang(coh_pair(true), 2);
  EXPECT_EQ(ec.status(ba, ba), Status::Neutral);
  EXPECT_EQ(ec.status(ba, bb), Status::SCoh);
  EXPECT_EQ(ec.status(ba, bab), Status::SCoh);
  Obj ei = Obj::bang(coh_pair(false), 2);
  EXPECT_EQ(ei.status(ba, bb), Status::SIncoh);

  // Positive coherence drops neutrality entirely.
  Obj w = Obj::bang(Obj::atoms(Model::Wcs, {"a", "b"},
                               {Status::SCoh, Status::SIncoh, Status::SIncoh, Status::SCoh}),
                    2);
  EXPECT_EQ(w.status(ba, ba), Status::SCoh);
  EXPECT_EQ(w.status(ba, bb), Status::SIncoh);

  // Non-uniform spaces: neutrality needs a perfect matching of neutral pairs.
  Obj n = Obj::bang(Obj::atoms(Model::Nucs, {"a", "b"},
                               {Status::Neutral, Status::SCoh, Status::SCoh, Status::Neutral}),
                    2);
  EXPECT_EQ(n.status(bab, bab), Status::Neutral);
  EXPECT_EQ(n.status(ba, bb), Status::SCoh);
  EXPECT_EQ(n.status(ba, bab), Status::SCoh);
}

TEST(ObjectTest, CompositeStatuses) {
  Point a = Point::mk_atom("a"), b = Point::mk_atom("b");
  Point d0 = Point::mk_deg(0), d1 = Point::mk_deg(1);

  // The unit and the degree object sit on the neutral diagonal except in wcs.
  Obj u = Obj::unit(Model::Coh);
  EXPECT_EQ(u.status(Point::mk_unit(), Point::mk_unit()), Status::Neutral);
  EXPECT_EQ(Obj::unit(Model::Wcs).status(Point::mk_unit(), Point::mk_unit()), Status::SCoh);
  Obj dc = Obj::degrees(Model::Coh, 2);
  EXPECT_EQ(dc.status(d0, d0), Status::Neutral);
  EXPECT_EQ(dc.status(d0, d1), Status::SCoh);
  EXPECT_EQ(Obj::degrees(Model::Wcs, 2).status(d0, d1), Status::SCoh);

  // S X in a coherence space: same degree behaves like X, distinct degrees
  // with equal base point are incoherent (limpl of scoh against neutral).
  Obj s = Obj::s_of(coh_pair(true), 2);
  auto sp = [&](const Point& d, const Point& x) { return Point::mk_pair(d, x); };
  EXPECT_EQ(s.status(sp(d0, a), sp(d0, a)), Status::Neutral);
  EXPECT_EQ(s.status(sp(d0, a), sp(d0, b)), Status::SCoh);
  EXPECT_EQ(s.status(sp(d0, a), sp(d1, a)), Status::SIncoh);
  EXPECT_EQ(s.status(sp(d0, a), sp(d1, b)), Status::SCoh);

  // With-tags are always coherent across components; plus-tags never are.
  Obj cw = Obj::with(Model::Coh, {coh_pair(true), coh_pair(true)});
  Obj cp = Obj::plus(Model::Coh, {coh_pair(true), coh_pair(true)});
  Point t0 = Point::mk_tag(0, a), t1 = Point::mk_tag(1, a);
  EXPECT_EQ(cw.status(t0, t1), Status::SCoh);
  EXPECT_EQ(cw.status(t0, t0), Status::Neutral);
  EXPECT_EQ(cp.status(t0, t1), Status::SIncoh);
  EXPECT_EQ(cp.status(t0, t0), Status::Neutral);

  // Tensor needs both coordinates neutral for neutrality.
  Obj tt = Obj::tensor(coh_pair(true), coh_pair(true));
  EXPECT_EQ(tt.status(Point::mk_pair(a, a), Point::mk_pair(a, a)), Status::Neutral);
  EXPECT_EQ(tt.status(Point::mk_pair(a, a), Point::mk_pair(a, b)), Status::SCoh);
  EXPECT_EQ(tt.status(Point::mk_pair(a, a), Point::mk_pair(b, b)), Status::SCoh);
}

TEST(ObjectTest, ContainsChecks) {
  Obj two = coh_pair(false);
  EXPECT_TRUE(two.contains(Point::mk_atom("a")));
  EXPECT_FALSE(two.contains(Point::mk_atom("z")));
  EXPECT_FALSE(two.contains(Point::mk_unit()));

  Obj d = Obj::degrees(Model::Rel, 2);
  EXPECT_TRUE(d.contains(Point::mk_deg(2)));
  EXPECT_FALSE(d.contains(Point::mk_deg(3)));
  EXPECT_FALSE(d.contains(Point::mk_atom("a")));

  Obj banged = Obj::bang(two, 2);
  Point a = Point::mk_atom("a");
  EXPECT_TRUE(banged.contains(Point::mk_bag({})));
  EXPECT_FALSE(banged.contains(Point::mk_bag({a, a, a})));
  EXPECT_FALSE(banged.contains(Point::mk_bag({Point::mk_atom("z")})));

  Obj t = Obj::tensor(two, d);
  EXPECT_TRUE(t.contains(Point::mk_pair(a, Point::mk_deg(1))));
  EXPECT_FALSE(t.contains(Point::mk_pair(Point::mk_deg(1), a)));
  EXPECT_FALSE(t.contains(a));

  Obj p = Obj::plus(Model::Coh, {two, two});
  EXPECT_TRUE(p.contains(Point::mk_tag(1, a)));
  EXPECT_FALSE(p.contains(Point::mk_tag(2, a)));
}

TEST(ObjectTest, RawObjectsRoundTripStatuses) {
  Point a = Point::mk_atom("a"), b = Point::mk_atom("b");
  std::map<std::pair<Point, Point>, Status> st;
  st[{a, a}] = Status::Neutral;
  st[{a, b}] = Status::SCoh;
  st[{b, b}] = Status::Neutral;
  Obj raw = Obj::raw(Model::Nucs, {b, a}, st);

  // The web comes back sorted regardless of construction order.
  EXPECT_EQ(raw.web(), (std::vector<Point>{a, b}));
  EXPECT_TRUE(raw.contains(a));
  EXPECT_FALSE(raw.contains(Point::mk_atom("c")));
  // Lookups are symmetric, and unlisted pairs default to incoherent.
  EXPECT_EQ(raw.status(a, b), Status::SCoh);
  EXPECT_EQ(raw.status(b, a), Status::SCoh);
  EXPECT_EQ(raw.status(a, a), Status::Neutral);
  EXPECT_EQ(raw.status(b, Point::mk_atom("c")), Status::SIncoh);
}

TEST(ObjectTest, StructuralEqualityAndModelGuards) {
  Obj two = rel_atoms({"a", "b"});
  EXPECT_EQ(two, rel_atoms({"a", "b"}));
  EXPECT_NE(two, rel_atoms({"a", "c"}));
  EXPECT_NE(Obj::bang(two, 2), Obj::bang(two, 3));
  EXPECT_NE(two, Obj::atoms(Model::WRelNat, {"a", "b"}));

  expect_fail(Errc::Type, [&] { Obj::tensor(two, Obj::atoms(Model::Wcs, {"a"}, {Status::SCoh})); });
  expect_fail(Errc::Type, [&] { Obj::with(Model::Rel, {two, Obj::atoms(Model::WRelNat, {"a"})}); });

  EXPECT_EQ(two.semiring(), ct::Semiring::Bool);
  EXPECT_EQ(Obj::atoms(Model::WRelRat, {"a"}).semiring(), ct::Semiring::RatPos);
}
