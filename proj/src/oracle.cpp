#include "metricdim/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "label_format.hpp"
#include "metricdim/errors.hpp"

namespace metricdim {

InfiniteGraphOracle::InfiniteGraphOracle(VertexId basepoint, NeighborFn fn,
                                         OracleMetadata metadata)
    : basepoint_(std::move(basepoint)),
      fn_(std::move(fn)),
      metadata_(std::move(metadata)) {}

std::vector<VertexId> InfiniteGraphOracle::neighbors(const VertexId& v) const {
  auto out = fn_(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& n : out) {
    if (n == v) throw std::logic_error("oracle produced a self-loop at " + v.str());
  }
  return out;
}

namespace {

using labels::pad;
using labels::parse_padded;

[[noreturn]] void unknown_vertex(const std::string& generator, const VertexId& v) {
  throw InputError("vertex " + v.str() + " does not belong to the " + generator +
                   " generator");
}

}  // namespace

InfiniteGraphOracle make_ray() {
  const auto label = [](int i) { return VertexId("v" + pad(i, 4)); };
  OracleMetadata md;
  md.name = "ray";
  md.end_count = 1;
  md.finicyclic = true;
  md.branch_count = 0;
  return InfiniteGraphOracle(
      label(0),
      [label](const VertexId& v) -> std::vector<VertexId> {
        const auto& s = v.str();
        std::optional<int> i;
        if (s.size() == 5 && s[0] == 'v') i = parse_padded({s.data() + 1, 4}, 4);
        if (!i) unknown_vertex("ray", v);
        if (*i == 0) return {label(1)};
        return {label(*i - 1), label(*i + 1)};
      },
      md);
}

InfiniteGraphOracle make_double_ray() {
  const auto label = [](int i) {
    return VertexId((i < 0 ? "v-" : "v+") + pad(std::abs(i), 4));
  };
  OracleMetadata md;
  md.name = "double_ray";
  md.end_count = 2;
  md.finicyclic = true;
  md.branch_count = 0;
  return InfiniteGraphOracle(
      label(0),
      [label](const VertexId& v) -> std::vector<VertexId> {
        const auto& s = v.str();
        std::optional<int> mag;
        if (s.size() == 6 && s[0] == 'v' && (s[1] == '+' || s[1] == '-')) {
          mag = parse_padded({s.data() + 2, 4}, 4);
        }
        if (!mag || (s[1] == '-' && *mag == 0)) unknown_vertex("double_ray", v);
        const int i = s[1] == '-' ? -*mag : *mag;
        return {label(i - 1), label(i + 1)};
      },
      md);
}

InfiniteGraphOracle make_spider(int k) {
  if (k < 3) throw InputError("k_spider requires k >= 3");
  const VertexId center("c");
  const auto arm = [](int a, int j) {
    return VertexId("a" + pad(a, 2) + "-" + pad(j, 4));
  };
  OracleMetadata md;
  md.name = "k_spider";
  md.end_count = k;
  md.finicyclic = true;
  md.branch_count = 1;
  return InfiniteGraphOracle(
      center,
      [k, center, arm](const VertexId& v) -> std::vector<VertexId> {
        if (v == center) {
          std::vector<VertexId> out;
          for (int a = 1; a <= k; ++a) out.push_back(arm(a, 1));
          return out;
        }
        const auto& s = v.str();
        std::optional<int> a, j;
        if (s.size() == 8 && s[0] == 'a' && s[3] == '-') {
          a = parse_padded({s.data() + 1, 2}, 2);
          j = parse_padded({s.data() + 4, 4}, 4);
        }
        if (!a || !j || *a < 1 || *a > k || *j < 1) unknown_vertex("k_spider", v);
        if (*j == 1) return {center, arm(*a, 2)};
        return {arm(*a, *j - 1), arm(*a, *j + 1)};
      },
      md);
}

namespace {

// Shared rail geometry for the two ladders; `step` distinguishes them: the
// plain ladder has rungs at every position, the broken ladder doubles the
// rail coordinates and keeps rungs at even positions only.
struct RailScheme {
  int rung_step;

  VertexId label(bool top, int pos) const {
    if (pos == 0) return VertexId(top ? "v1" : "v2");
    return VertexId((top ? "t" : "b") + pad(pos, 4));
  }

  std::optional<std::pair<bool, int>> parse(const VertexId& v) const {
    const auto& s = v.str();
    if (s == "v1") return {{true, 0}};
    if (s == "v2") return {{false, 0}};
    if (s.size() == 5 && (s[0] == 't' || s[0] == 'b')) {
      if (auto pos = parse_padded({s.data() + 1, 4}, 4); pos && *pos >= 1) {
        return {{s[0] == 't', *pos}};
      }
    }
    return std::nullopt;
  }

  std::vector<VertexId> neighbors(bool top, int pos) const {
    std::vector<VertexId> out;
    if (pos > 0) out.push_back(label(top, pos - 1));
    out.push_back(label(top, pos + 1));
    if (pos % rung_step == 0) out.push_back(label(!top, pos));
    return out;
  }
};

InfiniteGraphOracle make_rail_graph(RailScheme scheme, OracleMetadata md) {
  const std::string name = md.name;
  return InfiniteGraphOracle(
      scheme.label(true, 0),
      [scheme, name](const VertexId& v) -> std::vector<VertexId> {
        const auto parsed = scheme.parse(v);
        if (!parsed) unknown_vertex(name, v);
        return scheme.neighbors(parsed->first, parsed->second);
      },
      std::move(md));
}

}  // namespace

InfiniteGraphOracle make_ladder() {
  OracleMetadata md;
  md.name = "ladder";
  md.end_count = 1;
  md.finicyclic = false;
  md.branch_count_infinite = true;
  return make_rail_graph(RailScheme{1}, std::move(md));
}

InfiniteGraphOracle make_broken_ladder() {
  OracleMetadata md;
  md.name = "broken_ladder";
  md.end_count = 1;
  md.finicyclic = false;
  md.branch_count_infinite = true;
  return make_rail_graph(RailScheme{2}, std::move(md));
}

InfiniteGraphOracle make_binary_tree() {
  const auto label = [](int i) { return VertexId("n" + pad(i, 6)); };
  OracleMetadata md;
  md.name = "binary_tree";
  md.end_count = 2;
  md.end_count_at_least = true;
  md.finicyclic = true;
  md.branch_count_infinite = true;
  return InfiniteGraphOracle(
      label(1),
      [label](const VertexId& v) -> std::vector<VertexId> {
        const auto& s = v.str();
        std::optional<int> i;
        if (s.size() == 7 && s[0] == 'n') i = parse_padded({s.data() + 1, 6}, 6);
        if (!i || *i < 1) unknown_vertex("binary_tree", v);
        std::vector<VertexId> out{label(2 * *i), label(2 * *i + 1)};
        if (*i > 1) out.push_back(label(*i / 2));
        return out;
      },
      md);
}

InfiniteGraphOracle make_comb(int pendant_length) {
  if (pendant_length < 1) throw InputError("comb requires pendant_length >= 1");
  const auto spine = [](int i) { return VertexId("s" + pad(i, 4)); };
  const auto pendant = [](int i, int j) {
    return VertexId("p" + pad(i, 4) + "-" + pad(j, 2));
  };
  OracleMetadata md;
  md.name = "comb";
  md.end_count = 1;
  md.finicyclic = true;
  md.branch_count_infinite = true;
  md.spine = spine;
  return InfiniteGraphOracle(
      spine(0),
      [spine, pendant, pendant_length](const VertexId& v) -> std::vector<VertexId> {
        const auto& s = v.str();
        if (s.size() == 5 && s[0] == 's') {
          if (auto i = parse_padded({s.data() + 1, 4}, 4)) {
            std::vector<VertexId> out{spine(*i + 1), pendant(*i, 1)};
            if (*i > 0) out.push_back(spine(*i - 1));
            return out;
          }
        }
        if (s.size() == 8 && s[0] == 'p' && s[5] == '-') {
          const auto i = parse_padded({s.data() + 1, 4}, 4);
          const auto j = parse_padded({s.data() + 6, 2}, 2);
          if (i && j && *j >= 1 && *j <= pendant_length) {
            std::vector<VertexId> out;
            out.push_back(*j == 1 ? spine(*i) : pendant(*i, *j - 1));
            if (*j < pendant_length) out.push_back(pendant(*i, *j + 1));
            return out;
          }
        }
        unknown_vertex("comb", v);
      },
      md);
}

InfiniteGraphOracle make_generator(const std::string& name, int param) {
  if (name == "ray") return make_ray();
  if (name == "double_ray") return make_double_ray();
  if (name == "k_spider") return make_spider(param);
  if (name == "ladder") return make_ladder();
  if (name == "broken_ladder") return make_broken_ladder();
  if (name == "binary_tree") return make_binary_tree();
  if (name == "comb") return make_comb(param);
  throw InputError("unknown generator: " + name);
}

}  // namespace metricdim
