#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wedderkit/constructions.hpp"
#include "wedderkit/group.hpp"

using namespace wedderkit;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(FIXTURES_DIR))
    if (entry.is_regular_file() && entry.path().extension() == ".cayley")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_CASE("the fixture set matches the catalog") {
  const std::vector<CatalogEntry>& catalog = small_group_catalog();
  std::vector<fs::path> files = fixture_files();
  REQUIRE(files.size() == catalog.size());
  REQUIRE(files.size() == 59);

  std::map<std::string, GroupPtr> by_name;
  for (const CatalogEntry& e : catalog) by_name[e.name] = e.group;

  std::map<int, int> order_counts;
  for (const fs::path& f : files) {
    // file names are "<order>_<catalog name>.cayley"
    std::string stem = f.stem().string();
    auto sep = stem.find('_');
    REQUIRE(sep != std::string::npos);
    int order = std::stoi(stem.substr(0, sep));
    std::string name = stem.substr(sep + 1);

    auto it = by_name.find(name);
    REQUIRE_MESSAGE(it != by_name.end(), stem);
    GroupPtr g = read_cayley_table(f.string());
    CHECK(g->order() == order);
    CHECK(g->name() == stem);
    CHECK_MESSAGE(is_isomorphic(g, it->second), stem);
    order_counts[order] += 1;
  }

  const std::map<int, int> expected = {
      {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14},
      {17, 1}, {18, 5}, {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}};
  CHECK(order_counts == expected);
}
