#include "doctest.h"

#include <bit>

#include "infralog/filters.hpp"

using namespace infralog;

TEST_CASE("classification of small ensembles") {
  std::vector<std::string> f2 = {"f0", "f1"};

  SUBCASE("full power set is a filter but not proper") {
    FilterSpec full(f2, {0, 1, 2, 3});
    CHECK(full.classify() == FilterClass::Filter);
  }

  SUBCASE("principal ultrafilter") {
    FilterSpec pf = FilterSpec::principal_ultrafilter(f2, "f0");
    CHECK(pf.classify() == FilterClass::Ultrafilter);
    CHECK(pf.members() == std::vector<std::uint64_t>{1, 3});
    for (std::uint64_t mask = 0; mask <= pf.full_mask(); ++mask)
      CHECK(pf.contains(mask) == ((mask & 1) != 0));
  }

  SUBCASE("the trivial filter {F} is proper but not ultra") {
    FilterSpec triv(f2, {3});
    CHECK(triv.classify() == FilterClass::ProperFilter);
  }

  SUBCASE("not closed under intersection") {
    FilterSpec bad({"a", "b", "c"}, {0b011, 0b110, 0b111});
    CHECK(bad.classify() == FilterClass::NotFilter);
  }

  SUBCASE("not closed upward") {
    FilterSpec bad(f2, {1});
    CHECK(bad.classify() == FilterClass::NotFilter);
  }
}

TEST_CASE("principal ultrafilters") {
  FilterSpec one = FilterSpec::principal_ultrafilter({"a"}, "a");
  CHECK(one.members() == std::vector<std::uint64_t>{1});
  CHECK(one.classify() == FilterClass::Ultrafilter);

  auto all3 = FilterSpec::all_ultrafilters({"a", "b", "c"});
  CHECK(all3.size() == 3);
  for (const FilterSpec& u : all3) {
    CHECK(u.classify() == FilterClass::Ultrafilter);
    CHECK(u.members().size() == 4);
  }
}

TEST_CASE("every ultrafilter on a small finite set is principal") {
  // Scan all ensembles on |F| <= 3 and compare the classification
  // against membership of a singleton generator.
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
    std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t ensembles = std::uint64_t{1} << subsets;
    int ultra_count = 0;
    for (std::uint64_t e = 0; e < ensembles; ++e) {
      std::vector<std::uint64_t> members;
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        if (e & (std::uint64_t{1} << mask)) members.push_back(mask);
      FilterSpec spec(labels, members);
      if (spec.classify() != FilterClass::Ultrafilter) continue;
      ++ultra_count;
      // The least member must be a singleton and generate the rest.
      std::uint64_t least = spec.full_mask();
      for (std::uint64_t m : spec.members()) least &= m;
      CHECK(std::popcount(least) == 1);
      CHECK(spec == FilterSpec::principal_ultrafilter(
                        labels, labels[static_cast<std::size_t>(std::countr_zero(least))]));
    }
    CHECK(ultra_count == n);
  }
}

TEST_CASE("generated filters") {
  std::vector<std::string> abc = {"a", "b", "c"};

  SUBCASE("two generators close to the supersets of their intersection") {
    auto f = generated_filter(abc, {0b011, 0b110});
    REQUIRE(f.has_value());
    CHECK(f->contains(0b010));
    CHECK(f->contains(0b011));
    CHECK(f->contains(0b111));
    CHECK_FALSE(f->contains(0b001));
    // Supersets of the singleton {b}: the principal ultrafilter at b.
    CHECK(f->classify() == FilterClass::Ultrafilter);
    CHECK(f->members().size() == 4);
  }

  SUBCASE("the empty set kills properness") {
    CHECK_FALSE(generated_filter(abc, {0}).has_value());
    CHECK_FALSE(generated_filter(abc, {0b001, 0b110}).has_value());
  }

  SUBCASE("empty ensemble generates the trivial filter") {
    auto f = generated_filter(abc, {});
    REQUIRE(f.has_value());
    CHECK(f->members() == std::vector<std::uint64_t>{0b111});
  }

  SUBCASE("generated filter is the least filter containing the ensemble") {
    // Intersect all filters containing the generators, on |F|=3.
    std::vector<std::uint64_t> gens = {0b011, 0b101};
    auto f = generated_filter(abc, gens);
    REQUIRE(f.has_value());
    std::uint64_t subsets = 8;
    std::vector<bool> in_all(static_cast<std::size_t>(subsets), true);
    std::uint64_t ensembles = std::uint64_t{1} << subsets;
    for (std::uint64_t e = 0; e < ensembles; ++e) {
      std::vector<std::uint64_t> members;
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        if (e & (std::uint64_t{1} << mask)) members.push_back(mask);
      bool covers = true;
      for (std::uint64_t g : gens)
        if (std::find(members.begin(), members.end(), g) == members.end()) covers = false;
      if (!covers) continue;
      FilterSpec spec(abc, members);
      FilterClass c = spec.classify();
      if (c == FilterClass::NotFilter) continue;
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        if (!spec.contains(mask)) in_all[static_cast<std::size_t>(mask)] = false;
    }
    for (std::uint64_t mask = 0; mask < subsets; ++mask)
      CHECK(f->contains(mask) == in_all[static_cast<std::size_t>(mask)]);
  }
}

TEST_CASE("ultrafilter extension") {
  std::vector<std::string> f2 = {"f0", "f1"};

  FilterSpec triv(f2, {3});
  FilterSpec ext = extend_to_ultrafilter(triv);
  CHECK(ext.classify() == FilterClass::Ultrafilter);
  CHECK(ext == FilterSpec::principal_ultrafilter(f2, "f0"));
  for (std::uint64_t m : triv.members()) CHECK(ext.contains(m));

  FilterSpec already = FilterSpec::principal_ultrafilter(f2, "f1");
  CHECK(extend_to_ultrafilter(already) == already);

  // Extension always contains the input and classifies as ultra.
  auto gen = generated_filter({"a", "b", "c"}, {0b110});
  REQUIRE(gen.has_value());
  FilterSpec up = extend_to_ultrafilter(*gen);
  CHECK(up.classify() == FilterClass::Ultrafilter);
  for (std::uint64_t m : gen->members()) CHECK(up.contains(m));
}

TEST_CASE("minimal members") {
  FilterSpec pf = FilterSpec::principal_ultrafilter({"a", "b", "c"}, "b");
  CHECK(pf.minimal_members() == std::vector<std::uint64_t>{0b010});
  FilterSpec triv({"a", "b"}, {3});
  CHECK(triv.minimal_members() == std::vector<std::uint64_t>{3});
}
