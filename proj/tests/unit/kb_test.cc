// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "genkb/kb/background.h"
#include "genkb/kb/io.h"
#include "genkb/kb/knowledge_base.h"
#include "genkb/kb/split.h"

namespace genkb {
namespace {

KnowledgeBase FromText(const std::string& text) {
  std::istringstream in(text);
  return ReadKb(in, "test.tsv");
}

TEST(QuantLabelTest, ParsesCaseInsensitively) {
  EXPECT_EQ(ParseQuantLabel("ALL"), QuantLabel::kAll);
  EXPECT_EQ(ParseQuantLabel("Some"), QuantLabel::kSome);
  EXPECT_EQ(ParseQuantLabel("none"), QuantLabel::kNone);
  EXPECT_FALSE(ParseQuantLabel("most").has_value());
  EXPECT_GT(QuantLabel::kAll, QuantLabel::kSome);
  EXPECT_GT(QuantLabel::kSome, QuantLabel::kNone);
}

TEST(QuantLabelTest, NumericEncodings) {
  EXPECT_EQ(ClassIndex(QuantLabel::kAll), 1);
  EXPECT_EQ(ClassIndex(QuantLabel::kSome), 2);
  EXPECT_EQ(ClassIndex(QuantLabel::kNone), 3);
  EXPECT_EQ(BinaryTarget(QuantLabel::kAll), 1);
  EXPECT_EQ(BinaryTarget(QuantLabel::kSome), 1);
  EXPECT_EQ(BinaryTarget(QuantLabel::kNone), -1);
}

TEST(LoadKbTest, SingleLine) {
  KnowledgeBase kb = FromText("butterfly\tpollinate\tflower\tall\n");
  EXPECT_EQ(kb.size(), 1u);
  EXPECT_EQ(kb.entities().size(), 2u);
  EXPECT_EQ(kb.relations().size(), 1u);
  EXPECT_EQ(kb.Label(NamedTriple{"butterfly", "pollinate", "flower"}),
            QuantLabel::kAll);
}

TEST(LoadKbTest, ConflictingDuplicateReportsLine) {
  try {
    FromText("a\tr\tb\tall\na\tr\tb\tsome\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("conflicting label at line 2"),
              std::string::npos);
  }
}

TEST(LoadKbTest, IdenticalDuplicatesMerge) {
  KnowledgeBase kb = FromText("a\tr\tb\tall\na\tr\tb\tALL\n");
  EXPECT_EQ(kb.size(), 1u);
}

TEST(LoadKbTest, PlantedDuplicatesMatchSetDedup) {
  std::mt19937_64 rng(11);
  std::vector<std::string> lines;
  for (int i = 0; i < 480; ++i) {
    lines.push_back("e" + std::to_string(i % 37) + "\tr" +
                    std::to_string(i / 37) + "\tt" + std::to_string(i % 11) +
                    "\t" + (i % 3 ? "all" : "some"));
  }
  for (int i = 0; i < 20; ++i) lines.push_back(lines[rng() % 480]);
  std::shuffle(lines.begin(), lines.end(), rng);
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  const std::set<std::string> oracle(lines.begin(), lines.end());
  EXPECT_EQ(FromText(text).size(), oracle.size());
  EXPECT_EQ(oracle.size(), 480u);
}

TEST(LoadKbTest, MalformedLineReportsLineNumber) {
  try {
    FromText("a\tr\tb\tall\n\na\tr\tb\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(FromText("a\tr\tb\tmaybe\n"), ParseError);
}

TEST(LoadKbTest, EmptyFileIsAnError) {
  EXPECT_THROW(FromText(""), ParseError);
  EXPECT_THROW(FromText("\n\n"), ParseError);
}

TEST(LoadKbTest, MissingFile) {
  EXPECT_THROW(LoadKb("/nonexistent/kb.tsv"), NotFoundError);
}

TEST(LoadKbTest, CanonicalRoundTrip) {
  KnowledgeBase kb =
      FromText("z\tr\ta\tsome\nb\tq\tc\tAll\na\tr\tz\tnone\n");
  std::ostringstream first;
  WriteKb(kb, first);
  EXPECT_EQ(first.str(), "a\tr\tz\tnone\nb\tq\tc\tall\nz\tr\ta\tsome\n");
  KnowledgeBase reloaded = FromText(first.str());
  EXPECT_TRUE(reloaded.SameContent(kb));
  std::ostringstream second;
  WriteKb(reloaded, second);
  EXPECT_EQ(first.str(), second.str());
}

TEST(TaxonomyTest, Siblings) {
  std::istringstream in("dog\tmammal\ncat\tmammal\n");
  Taxonomy tax = ReadTaxonomy(in, "tax.tsv");
  EXPECT_EQ(tax.Siblings("dog"), std::set<std::string>{"cat"});
  EXPECT_EQ(tax.Siblings("cat"), std::set<std::string>{"dog"});
  EXPECT_TRUE(tax.Siblings("mammal").empty());
}

TEST(TaxonomyTest, CycleIsReported) {
  std::istringstream in("a\tb\nb\ta\n");
  try {
    ReadTaxonomy(in, "tax.tsv");
    FAIL();
  } catch (const CycleError& e) {
    ASSERT_GE(e.witness().size(), 3u);
    EXPECT_EQ(e.witness().front(), e.witness().back());
  }
}

TEST(TaxonomyTest, LongerCycleWitnessIsACycle) {
  try {
    Taxonomy::FromEdges({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "a"}});
    FAIL();
  } catch (const CycleError& e) {
    const auto& w = e.witness();
    EXPECT_EQ(w.front(), w.back());
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const bool edge = (w[i] == "a" && w[i + 1] == "b") ||
                        (w[i] == "b" && w[i + 1] == "c") ||
                        (w[i] == "c" && w[i + 1] == "a");
      EXPECT_TRUE(edge) << w[i] << " -> " << w[i + 1];
    }
  }
}

TEST(TaxonomyTest, RandomForestSiblingsMatchPairScan) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i < 100; ++i) {
      // Parents always have smaller indices, so the graph is acyclic; some
      // nodes get a second parent.
      if (rng() % 10 == 0) continue;
      edges.emplace_back("n" + std::to_string(i),
                         "n" + std::to_string(rng() % i));
      if (i > 2 && rng() % 7 == 0) {
        edges.emplace_back("n" + std::to_string(i),
                           "n" + std::to_string(rng() % i));
      }
    }
    Taxonomy tax = Taxonomy::FromEdges(edges);
    for (int i = 0; i < 100; ++i) {
      const std::string e = "n" + std::to_string(i);
      std::set<std::string> oracle;
      for (const auto& [c1, p1] : edges) {
        if (c1 != e) continue;
        for (const auto& [c2, p2] : edges) {
          if (p2 == p1 && c2 != e) oracle.insert(c2);
        }
      }
      EXPECT_EQ(tax.Siblings(e), oracle) << e;
      for (const auto& s : oracle) EXPECT_EQ(tax.Siblings(s).count(e), 1u);
    }
  }
}

TEST(TaxonomyTest, CollapseChain) {
  Taxonomy tax = Taxonomy::FromEdges(
      {{"a", "b"}, {"b", "c"}, {"c", "root"}, {"x", "a"}});
  const auto depth = tax.Depths();
  EXPECT_EQ(depth.at("root"), 0);
  EXPECT_EQ(depth.at("a"), 3);
  Taxonomy collapsed = CollapseTaxonomy(tax, 2);
  // a (depth 3) stays under b (depth 2); x (depth 4) moves up to b.
  EXPECT_EQ(collapsed.Parents("a"), std::set<std::string>{"b"});
  EXPECT_EQ(collapsed.Parents("x"), std::set<std::string>{"b"});
  EXPECT_EQ(collapsed.Parents("b"), std::set<std::string>{"c"});
  for (const auto& [e, d] : collapsed.Depths()) EXPECT_LE(d, 3) << e;
}

TEST(TaxonomyTest, CollapseNoOpOnShallow) {
  Taxonomy tax = Taxonomy::FromEdges({{"a", "m"}, {"b", "m"}, {"m", "r"}});
  EXPECT_EQ(CollapseTaxonomy(tax, 2), tax);
  EXPECT_EQ(CollapseTaxonomy(tax, 10), tax);
  EXPECT_THROW(CollapseTaxonomy(tax, 0), ConfigError);
}

TEST(BackgroundTest, SchemaTypesMustExist) {
  std::istringstream types_in("butterfly\tinsect\nflower\tplant\n");
  TypeMap types = ReadTypeMap(types_in, "types.tsv");
  std::istringstream good("pollinate\tinsect\tplant\npollinate\tinsect\tplant\n");
  Schema schema = ReadSchema(good, "schema.tsv", types);
  ASSERT_NE(schema.Pairs("pollinate"), nullptr);
  EXPECT_EQ(schema.Pairs("pollinate")->size(), 1u);
  EXPECT_EQ(schema.Pairs("eat"), nullptr);
  std::istringstream bad("pollinate\tinsect\tmineral\n");
  EXPECT_THROW(ReadSchema(bad, "schema.tsv", types), ParseError);
  EXPECT_TRUE(types.Types("rock").empty());
}

KnowledgeBase NumberedKb(int n) {
  KnowledgeBase kb;
  for (int i = 0; i < n; ++i) {
    kb.Add("s" + std::to_string(i % 97), "r" + std::to_string(i % 5),
           "t" + std::to_string(i), QuantLabel::kAll);
  }
  return kb;
}

TEST(SplitTest, Sizes) {
  auto five = ComputeSplitSizes(5);
  EXPECT_EQ(five.train, 3u);
  EXPECT_EQ(five.validation, 1u);
  EXPECT_EQ(five.test, 1u);
  auto big = ComputeSplitSizes(10604);
  EXPECT_EQ(big.train, 6363u);
  EXPECT_EQ(big.validation, 2121u);
  EXPECT_EQ(big.test, 2120u);
}

TEST(SplitTest, PartitionsAndIsDeterministic) {
  KnowledgeBase kb = NumberedKb(10604);
  DatasetSplit a = SplitKb(kb, 7);
  DatasetSplit b = SplitKb(kb, 7);
  EXPECT_EQ(a.train.size(), 6363u);
  EXPECT_EQ(a.validation.size(), 2121u);
  EXPECT_EQ(a.test.size(), 2120u);
  std::ostringstream wa, wb;
  WriteKb(a.train, wa);
  WriteKb(a.test, wa);
  WriteKb(b.train, wb);
  WriteKb(b.test, wb);
  EXPECT_EQ(wa.str(), wb.str());
}

TEST(SplitTest, DisjointUnionForManySeeds) {
  KnowledgeBase kb = NumberedKb(203);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DatasetSplit s = SplitKb(kb, seed);
    std::set<Triple> seen;
    for (const auto* part : {&s.train, &s.validation, &s.test}) {
      for (const auto& [t, label] : part->triples()) {
        EXPECT_TRUE(seen.insert(t).second);
        EXPECT_EQ(kb.Label(t), label);
      }
    }
    EXPECT_EQ(seen.size(), kb.size());
  }
}

TEST(SplitTest, TooFewTriples) {
  EXPECT_THROW(SplitKb(NumberedKb(4), 1), ConfigError);
}

}  // namespace
}  // namespace genkb
