#include "cocat/finset.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cocat/error.hpp"

namespace cocat {

FinMap FinMap::identity(std::size_t n) {
  FinMap f{n, n, std::vector<std::size_t>(n)};
  std::iota(f.values.begin(), f.values.end(), 0);
  return f;
}

FinMap FinMap::constant(std::size_t source, std::size_t target, std::size_t value) {
  return FinMap{source, target, std::vector<std::size_t>(source, value)};
}

bool FinMap::total() const {
  return values.size() == source &&
         std::all_of(values.begin(), values.end(), [&](std::size_t v) { return v < target; });
}

bool FinMap::injective() const {
  std::vector<bool> seen(target, false);
  for (auto v : values) {
    if (seen.at(v)) return false;
    seen[v] = true;
  }
  return true;
}

FinMap then(const FinMap& first, const FinMap& second) {
  if (first.target != second.source) throw Error(ErrorKind::InvalidInput, "maps are not composable");
  FinMap out{first.source, second.target, {}};
  for (auto v : first.values) out.values.push_back(second(v));
  return out;
}

std::string to_string(const FinMap& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(f.values[k]);
  }
  return out + "]";
}

SetPushout pushout_set(const FinMap& f, const FinMap& g) {
  if (f.source != g.source) throw Error(ErrorKind::InvalidInput, "pushout legs have different sources");
  const std::size_t nb = f.target;
  std::vector<std::size_t> parent(nb + g.target);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < f.source; ++a) {
    auto x = find(f(a)), y = find(nb + g(a));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::optional<std::size_t>> index(parent.size());
  SetPushout out;
  std::vector<std::size_t> image(parent.size());
  for (std::size_t k = 0; k < parent.size(); ++k) {
    auto r = find(k);
    if (!index[r]) index[r] = out.apex++;
    image[k] = *index[r];
  }
  out.left = FinMap{nb, out.apex, {image.begin(), image.begin() + nb}};
  out.right = FinMap{g.target, out.apex, {image.begin() + nb, image.end()}};
  return out;
}

FinMap copair(const FinMap& left, const FinMap& right, const FinMap& to_left, const FinMap& to_right) {
  FinMap out{left.target, to_left.target, std::vector<std::size_t>(left.target)};
  std::vector<bool> hit(left.target, false);
  for (std::size_t x = left.source; x-- > 0;) {
    out.values[left(x)] = to_left(x);
    hit[left(x)] = true;
  }
  for (std::size_t x = right.source; x-- > 0;) {
    if (hit[right(x)]) continue;
    out.values[right(x)] = to_right(x);
    hit[right(x)] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw Error(ErrorKind::InvalidInput, "injections are not jointly surjective");
  }
  return out;
}


bool is_pushout(const FinMap& f, const FinMap& g, const FinMap& left, const FinMap& right, std::string* witness) {
  auto fail = [&](std::string why) {
    if (witness) *witness = std::move(why);
    return false;
  };
  if (left.target != right.target) return fail("injections have different targets");
  if (then(f, left) != then(g, right)) return fail("square does not commute");
  auto canon = pushout_set(f, g);
  if (canon.apex != left.target) {
    return fail("apex has " + std::to_string(left.target) + " elements, pushout has " + std::to_string(canon.apex));
  }
  std::vector<bool> hit(left.target, false);
  for (auto v : left.values) hit[v] = true;
  for (auto v : right.values) hit[v] = true;
  for (std::size_t x = 0; x < hit.size(); ++x) {
    if (!hit[x]) return fail("element " + std::to_string(x) + " is not in the image of the injections");
  }
  return true;
}

}  // namespace cocat
