#include "minq/stringy.hpp"

#include "minq/models.hpp"

#include <stdexcept>

namespace minq {

bool rational_is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

std::string rational_to_string(const Rational& r) {
  std::string s = boost::multiprecision::numerator(r).str();
  if (!rational_is_integer(r)) s += "/" + boost::multiprecision::denominator(r).str();
  return s;
}

bool is_gorenstein(const Quiver& q) {
  const auto& pics = q.pics();
  for (int p : pics)
    if (q.height(p) != q.height(pics.front())) return false;
  return true;
}

std::vector<int> coheights(const Quiver& q) {
  if (!is_gorenstein(q))
    throw std::invalid_argument("coheights require a Gorenstein quiver");
  std::vector<int> coh(q.size());
  if (q.empty()) return coh;
  int hw = q.height(q.pics().front());
  for (int v = 1; v <= q.size(); ++v) {
    coh[v - 1] = hw - q.height(v);
    if (coh[v - 1] < 0) throw std::logic_error("negative coheight");
  }
  return coh;
}

Rational stringy_euler(const Quiver& q) {
  Rational e = 1;
  for (int c : coheights(q)) e *= Rational(c + 2, c + 1);
  return e;
}

CrepantObstruction crepant_obstruction(const Quiver& q) {
  CrepantObstruction result;
  result.gorenstein = is_gorenstein(q);
  if (!result.gorenstein) return result;
  result.e_st = stringy_euler(q);
  result.obstructed = !rational_is_integer(*result.e_st);
  if (*result.obstructed && has_ih_small_resolution(q).admits)
    throw std::logic_error("obstructed quiver admits an IH-small resolution");
  return result;
}

}  // namespace minq
