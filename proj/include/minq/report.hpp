#pragma once

#include "minq/chow.hpp"
#include "minq/models.hpp"
#include "minq/quiver.hpp"
#include "minq/stringy.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace minq {

using Json = nlohmann::ordered_json;

Json invariants_json(const Quiver& q);
Json models_json(const Quiver& q);
Json stringy_json(const Quiver& q);
// Full bundle: quiver, invariants, models, stringy.
Json full_report_json(const Quiver& q);

std::string quiver_table(const Quiver& q);
std::string invariants_table(const Quiver& q);
std::string models_table(const Quiver& q);
std::string stringy_table(const Quiver& q);
std::string smooth_table(const Quiver& q);
Json smooth_json(const Quiver& q);

struct ListRow {
  int id = 0;
  int dim = 0;
  int n_pics = 0;
  std::vector<int> pic_heights;
  bool factorial = false;
  bool gorenstein = false;
  bool smooth = false;
  bool ih_small = false;
};

std::vector<ListRow> list_rows(const std::vector<Quiver>& quivers);
std::string list_table(const RootSystemId& sys, int weight,
                       const std::vector<Quiver>& quivers);
Json list_json(const RootSystemId& sys, int weight, const std::vector<Quiver>& quivers);

struct ClassifySummary {
  int total = 0;
  int smooth = 0;
  int factorial = 0;
  int gorenstein = 0;
  int ih_small = 0;
};

ClassifySummary classify_summary(const std::vector<Quiver>& quivers);
std::string classify_table(const RootSystemId& sys, int weight, const ClassifySummary& s);
Json classify_json(const RootSystemId& sys, int weight, const ClassifySummary& s);

}  // namespace minq
