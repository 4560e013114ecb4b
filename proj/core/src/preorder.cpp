#include "restheory/preorder.hpp"

#include "restheory/errors.hpp"

#include <algorithm>
#include <sstream>

namespace restheory {

namespace {

std::vector<ResourceSet> transpose(const std::vector<ResourceSet>& rows) {
  const std::size_t n = rows.size();
  std::vector<ResourceSet> cols(n, ResourceSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    rows[a].for_each([&](ResourceId b) { cols[b].insert(static_cast<ResourceId>(a)); });
  }
  return cols;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FinitePreorder::FinitePreorder(std::vector<std::string> labels, std::vector<ResourceSet> down_rows)
    : labels_(std::move(labels)), down_(std::move(down_rows)) {
  const std::size_t n = labels_.size();
  if (down_.size() != n) throw Error(ErrorKind::NotAPreorder, "row count differs from label count");
  for (std::size_t a = 0; a < n; ++a) {
    if (down_[a].universe() != n) throw Error(ErrorKind::NotAPreorder, "row universe differs from carrier");
    if (!down_[a].contains(static_cast<ResourceId>(a))) {
      throw Error(ErrorKind::NotAPreorder, "not reflexive at " + labels_[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    down_[a].for_each([&](ResourceId b) {
      if (auto c = down_[b].first_not_in(down_[a])) {
        throw Error(ErrorKind::NotAPreorder, "not transitive: " + labels_[a] + " >= " + labels_[b] +
                                                 " >= " + labels_[*c]);
      }
    });
  }
  up_ = transpose(down_);
}

FinitePreorder FinitePreorder::closure_of(std::vector<std::string> labels, std::vector<ResourceSet> rows) {
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a) rows[a].insert(static_cast<ResourceId>(a));
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].contains(static_cast<ResourceId>(k))) rows[a] |= rows[k];
    }
  }
  return FinitePreorder(std::move(labels), std::move(rows));
}

FinitePreorder FinitePreorder::from_pairs(std::vector<std::string> labels,
                                          const std::vector<std::pair<ResourceId, ResourceId>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<ResourceSet> rows(n, ResourceSet(n));
  for (auto [a, b] : pairs) rows[a].insert(b);
  return FinitePreorder(std::move(labels), std::move(rows));
}

bool FinitePreorder::is_partial_order() const {
  for (std::size_t a = 0; a < size(); ++a) {
    const ResourceSet both = down_[a] & up_[a];
    if (both.count() != 1) return false;
  }
  return true;
}

bool FinitePreorder::is_chain_on(const ResourceSet& w) const {
  bool chain = true;
  w.for_each([&](ResourceId a) {
    if (!chain) return;
    if (!(w - (down_[a] | up_[a])).empty()) chain = false;
  });
  return chain;
}

std::vector<std::pair<ResourceId, ResourceId>> FinitePreorder::pairs() const {
  std::vector<std::pair<ResourceId, ResourceId>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    down_[a].for_each([&](ResourceId b) { out.emplace_back(static_cast<ResourceId>(a), b); });
  }
  return out;
}

Quotient quotient(const FinitePreorder& pre) {
  const std::size_t n = pre.size();
  Quotient q;
  q.class_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    const auto id = static_cast<ResourceId>(q.classes.size());
    std::vector<ResourceId> members;
    (pre.down(static_cast<ResourceId>(a)) & pre.up(static_cast<ResourceId>(a))).for_each([&](ResourceId b) {
      members.push_back(b);
      seen[b] = true;
      q.class_of[b] = id;
    });
    q.classes.push_back(std::move(members));
  }
  const std::size_t m = q.classes.size();
  std::vector<std::string> labels;
  std::vector<ResourceSet> rows(m, ResourceSet(m));
  for (std::size_t c = 0; c < m; ++c) {
    std::string label;
    for (ResourceId a : q.classes[c]) label += (label.empty() ? "" : "~") + pre.label(a);
    labels.push_back(std::move(label));
    pre.down(q.classes[c].front()).for_each([&](ResourceId b) { rows[c].insert(q.class_of[b]); });
  }
  q.order = FinitePreorder(std::move(labels), std::move(rows));
  return q;
}

std::vector<std::pair<ResourceId, ResourceId>> hasse_edges(const FinitePreorder& po) {
  std::vector<std::pair<ResourceId, ResourceId>> edges;
  for (std::size_t a = 0; a < po.size(); ++a) {
    const auto ra = static_cast<ResourceId>(a);
    ResourceSet strict = po.down(ra);
    strict.erase(ra);
    strict.for_each([&](ResourceId b) {
      ResourceSet between = strict;
      between.erase(b);
      bool covered = true;
      between.for_each([&](ResourceId c) {
        if (po.geq(c, b)) covered = false;
      });
      if (covered) edges.emplace_back(ra, b);
    });
  }
  return edges;
}

std::string to_dot(const FinitePreorder& pre, const std::string& graph_name) {
  const Quotient q = quotient(pre);
  const auto& labels = q.order.labels();
  std::vector<std::string> nodes = labels;
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : hasse_edges(q.order)) edges.emplace_back(labels[a], labels[b]);
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph " << quote(graph_name) << " {\n";
  out << "  rankdir=TB;\n";
  for (const auto& node : nodes) out << "  " << quote(node) << ";\n";
  for (const auto& [from, to] : edges) out << "  " << quote(from) << " -> " << quote(to) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace restheory
