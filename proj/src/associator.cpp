#include <algorithm>
#include <map>
#include <sstream>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"
#include "cocat/tensor.hpp"

namespace cocat {

namespace {

std::vector<std::string> tokens(std::string label) {
  std::replace_if(label.begin(), label.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, ' ');
  std::istringstream in(label);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Functor by_tokens(const CategoryPtr& source, const CategoryPtr& target) {
  const Graph& s = source->graph();
  const Graph& t = target->graph();
  std::map<std::vector<std::string>, VertexId> vertices;
  std::map<std::vector<std::string>, EdgeId> edges;
  for (VertexId v = 0; v < t.vertex_count(); ++v) vertices[tokens(t.vertex(v))] = v;
  for (EdgeId e = 0; e < t.edge_count(); ++e) edges[tokens(t.edge(e).name)] = e;
  std::vector<VertexId> objects;
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    auto it = vertices.find(tokens(s.vertex(v)));
    if (it == vertices.end()) throw Error(ErrorKind::InvalidInput, "no object matching " + s.vertex(v));
    objects.push_back(it->second);
  }
  std::vector<Path> images;
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    auto it = edges.find(tokens(s.edge(e).name));
    if (it == edges.end()) throw Error(ErrorKind::InvalidInput, "no generator matching " + s.edge(e).name);
    images.push_back(Path::of_edge(t, it->second));
  }
  return Functor(source, target, std::move(objects), std::move(images));
}

struct Outcome {
  bool iso = false;
  bool bounded = false;
  bool bijective = false;
  std::string why;
};

class Extension {
 public:
  Extension(HigherPtr left, HigherPtr right)
      : left_(std::move(left)), right_(std::move(right)), there_(by_tokens(left_->base, right_->base)),
        back_(by_tokens(right_->base, left_->base)) {
    for (const auto& cell : left_->cells) {
      std::vector<CellId> options;
      for (CellId j = 0; j < right_->cells.size(); ++j) {
        const auto& r = right_->cells[j];
        if (r.invertible == cell.invertible && right_->base->equal(r.src, there_.apply(cell.src)) == Truth::Yes &&
            right_->base->equal(r.tgt, there_.apply(cell.tgt)) == Truth::Yes) {
          options.push_back(j);
        }
      }
      candidates_.push_back(std::move(options));
    }
    total_ = 1;
    for (const auto& c : candidates_) {
      total_ *= c.size();
      enforce_guard(total_ <= (std::size_t{1} << 16), ErrorKind::SearchSpaceTooLarge,
                    "associator extension has more than 65536 assignments");
    }
  }

  std::size_t total() const { return total_; }

  Outcome evaluate(std::size_t index) const {
    Outcome out;
    if (left_->cells.size() != right_->cells.size()) {
      out.why = "the two sides have different numbers of 2-cells";
      return out;
    }
    std::vector<CellId> forward(left_->cells.size());
    std::vector<int> backward(right_->cells.size(), -1);
    for (std::size_t k = 0; k < forward.size(); ++k) {
      const auto& opts = candidates_[k];
      forward[k] = opts[index % opts.size()];
      index /= opts.size();
      if (backward[forward[k]] >= 0) {
        out.why = "two 2-cells map to " + right_->cells[forward[k]].name;
        return out;
      }
      backward[forward[k]] = static_cast<int>(k);
    }
    out.bijective = true;
    std::vector<TwoCellWord> there_cells, back_cells;
    for (CellId j : forward) there_cells.push_back(generator_cell(*right_, j));
    for (int k : backward) back_cells.push_back(generator_cell(*left_, static_cast<CellId>(k)));
    SesquiFunctor there(left_, right_, there_, std::move(there_cells));
    SesquiFunctor back(right_, left_, back_, std::move(back_cells));
    if (auto d = there.defect(&out.bounded)) {
      out.why = "forward map: " + *d;
      return out;
    }
    if (auto d = back.defect(&out.bounded)) {
      out.why = "inverse map: " + *d;
      return out;
    }
    out.iso = true;
    return out;
  }

 private:
  HigherPtr left_;
  HigherPtr right_;
  Functor there_;
  Functor back_;
  std::vector<std::vector<CellId>> candidates_;
  std::size_t total_ = 0;
};

}  // namespace

AssociatorExtension check_associator_extension(TensorKind kind, bool parallel) {
  if (kind == TensorKind::Cartesian) {
    throw Error(ErrorKind::InvalidInput, "the associator check covers the funny, Gray and tensor2 kinds");
  }
  auto two = locally_discrete(Category::make(ordinal(2)), Flavor::TwoCategory);
  auto left = tensor_higher(kind, tensor_higher(kind, two, two), two);
  auto right = tensor_higher(kind, two, tensor_higher(kind, two, two));
  const Extension ext(left, right);

  AssociatorExtension result;
  result.assignments = ext.total();
  const auto n = static_cast<long long>(ext.total());
  std::vector<Outcome> outcomes(ext.total());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) outcomes[i] = ext.evaluate(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) outcomes[i] = ext.evaluate(static_cast<std::size_t>(i));
  }
  // Prefer a bijection that fails on relations as the witness.
  for (const auto& o : outcomes) {
    if (o.iso) ++result.extensions;
    if (o.bounded) result.bounded = true;
    if (!o.iso && o.bijective) ++result.bijections_rejected;
    if (!o.iso && (result.witness.empty() || (o.bijective && result.bijections_rejected == 1))) result.witness = o.why;
  }
  return result;
}

}  // namespace cocat
