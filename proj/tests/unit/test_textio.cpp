#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "floer/textio.hpp"

using namespace floer;

TEST(Parse, SingleGenerator) {
  const auto objs = parse_text("complex single\n  gen e 0\nend\n");
  ASSERT_EQ(objs.size(), 1u);
  EXPECT_EQ(objs[0].name, "single");
  const auto& C = std::get<ChainComplex>(objs[0].object);
  EXPECT_EQ(C.size(), 1u);
  EXPECT_FALSE(C.u.has_value());
  EXPECT_EQ(C.ring, Ring::Z());
}

TEST(Parse, ActionsRingAndComments) {
  const std::string text =
      "# leading comment\n"
      "complex c   # trailing comment\n"
      "  ring F3\n"
      "  gen a#1 0\n"
      "  gen b 2\n"
      "  u b a#1 4\n"
      "  y\n"
      "end\n";
  const auto objs = parse_text(text);
  const auto& C = std::get<ChainComplex>(objs.at(0).object);
  EXPECT_EQ(C.ring, Ring::F(3));
  EXPECT_EQ(C.mod.name(0), "a#1");  // '#' inside a token is not a comment
  ASSERT_TRUE(C.u && C.y);
  EXPECT_EQ(C.u->get(0, 1), 1);     // reduced mod 3
  EXPECT_TRUE(C.y->is_zero());
}

TEST(Parse, DegreeViolationNamesThePair) {
  try {
    parse_text("complex bad\n  gen a 0\n  gen b 0\n  d a b 1\nend\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("a->b"), std::string::npos) << e.what();
  }
}

TEST(Parse, LawViolationIsAValidationError) {
  EXPECT_THROW(parse_text("complex c\n  gen a 1\n  gen b 0\n  gen z 0\n  d a b 1\n  y b a 1\nend\n"),
               ValidationError);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_text(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  EXPECT_EQ(line_of("complex c\n  gen a 0\n  frobnicate\nend\n"), 3);
  EXPECT_EQ(line_of("complex c\n  gen a zero\nend\n"), 2);
  EXPECT_EQ(line_of("complex c\n  gen a 0\n"), 1);                // missing end: the unclosed header
  EXPECT_EQ(line_of("complex c\n  gen a 0\n  d a q 1\nend\n"), 3);  // unknown generator
  EXPECT_EQ(line_of("balanced b\n  part x\nend\n"), 2);
  EXPECT_EQ(line_of("\n\nwidget w\nend\n"), 3);
}

TEST(Parse, FilteredComplex) {
  const auto objs = parse_text("complex f filtered\n  gen a 0\n  gen b 1\n  dU a b 1 1\nend\n");
  const auto& F = std::get<FilteredComplex>(objs.at(0).object);
  EXPECT_EQ(F.mod.size(), 2u);
  EXPECT_EQ(F.d.at({0, 1}).at(1), 1);
  EXPECT_THROW(parse_text("complex f\n  gen a 0\n  gen b 1\n  dU a b 1 1\nend\n"), ParseError);
}

TEST(Golden, TowerFileMatchesTowerModel) {
  ChainComplex pt(GradedModule({{"e", 0}}));
  EXPECT_EQ(fixture::load_one<BalancedComponents>("tower_n3.txt"), tower_model({pt, 3, {}}));
}

TEST(Golden, PrintParseIsTheIdentityOnEveryFile) {
  const auto files = fixture::corpus_files();
  ASSERT_GE(files.size(), 20u);
  for (const auto& f : files) {
    const std::string text = fixture::read(f);
    EXPECT_EQ(print(parse_text(text)), text) << f;
  }
}

TEST(RoundTrip, RandomObjects) {
  RandomParams p;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng r(seed);
    const ChainComplex C = random_y_complex(r, p);
    const FilteredComplex F = random_filtered(r, p);
    const BalancedComponents B = random_decoupled(r, p);
    const std::string text = print("c", C) + "\n" + print("f", F) + "\n" + print("b", B);
    const auto objs = parse_text(text);
    ASSERT_EQ(objs.size(), 3u);
    const auto& C2 = std::get<ChainComplex>(objs[0].object);
    EXPECT_EQ(C2.mod, C.mod);
    EXPECT_EQ(C2.d, C.d);
    EXPECT_EQ(C2.y, C.y);
    EXPECT_EQ(std::get<FilteredComplex>(objs[1].object), F);
    EXPECT_EQ(std::get<BalancedComponents>(objs[2].object), B);
    EXPECT_EQ(print(objs), text);
  }
}

TEST(RoundTrip, SumMapsResolveAgainstTheProduct) {
  const auto objs = parse_file(fixture::corpus("summaps_identity.txt"));
  ASSERT_EQ(objs.size(), 3u);
  const ChainComplex P =
      product_complex({std::get<ChainComplex>(objs[0].object), std::get<ChainComplex>(objs[1].object)});
  const SumMapsFile& f = std::get<SumMapsFile>(objs[2].object);
  const ConnSumMaps m = resolve(f, P);
  EXPECT_TRUE(verify_sum_maps(P, m).ok());
  EXPECT_EQ(print("identity", unresolve(m)), print("identity", f));

  SumMapsFile bad = f;
  bad.maps["V0"].entries.push_back({"a#e.1", "nowhere", Int(1)});
  EXPECT_THROW(resolve(bad, P), ValidationError);
}
