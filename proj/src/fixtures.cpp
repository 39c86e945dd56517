#include "ggd/fixtures.hpp"

#include <algorithm>
#include <cstdlib>

namespace ggd {

namespace {

std::string pname(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int mod(int a, int n) { return ((a % n) + n) % n; }

int cyclic_distance(int i, int j, int n) {
  const int d = mod(i - j, n);
  return std::min(d, n - d);
}

void add_pair_group(GgdModel& m, int n) {
  GroupTables t;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      t.object_product.push_back(
          {std::to_string(x), std::to_string(y), std::to_string(mod(x + y, n))});
    }
  }
  t.object_unit = "0";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          t.morphism_product.push_back(
              {pname(a, b), pname(c, d), pname(mod(a + c, n), mod(b + d, n))});
        }
      }
    }
  }
  m.group = std::move(t);
}

// Star of x as the cycle (x,0) - (x,1) - ... - (x,n-1) - (x,0), or the
// path without the closing edge.
void add_pair_edges(GgdModel& m, int n, bool closed) {
  for (int x = 0; x < n; ++x) {
    for (int j = 0; j + 1 < n; ++j) {
      m.star_edges.push_back({std::to_string(x), pname(x, j), pname(x, j + 1)});
    }
    if (closed && n > 2) {
      m.star_edges.push_back({std::to_string(x), pname(x, n - 1), pname(x, 0)});
    }
  }
}

std::vector<std::string> pair_w(int n, int radius, bool cyclic) {
  std::vector<std::string> w;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int d = cyclic ? cyclic_distance(i, j, n) : std::abs(i - j);
      if (d <= radius) {
        w.push_back(pname(i, j));
      }
    }
  }
  return w;
}

LocalMorphismSpec identity_on(const std::vector<std::string>& w,
                              std::string target) {
  LocalMorphismSpec spec{std::move(target), {}};
  for (const auto& u : w) {
    spec.map.emplace_back(u, u);
  }
  return spec;
}

}  // namespace

GgdModel pair_groupoid(int n) {
  GgdModel m;
  for (int i = 0; i < n; ++i) {
    m.groupoid.objects.push_back(std::to_string(i));
    m.groupoid.identities.push_back({pname(i, i), std::to_string(i)});
    for (int j = 0; j < n; ++j) {
      m.groupoid.morphisms.push_back(
          {pname(i, j), std::to_string(i), std::to_string(j)});
      for (int k = 0; k < n; ++k) {
        m.groupoid.compose.push_back({pname(i, j), pname(j, k), pname(i, k)});
      }
    }
  }
  m.canonicalize();
  return m;
}

GgdModel cyclic_group(int n) {
  GgdModel m;
  m.groupoid.objects = {"o"};
  m.groupoid.identities = {{"0", "o"}};
  GroupTables t;
  t.object_product = {{"o", "o", "o"}};
  t.object_unit = "o";
  for (int a = 0; a < n; ++a) {
    m.groupoid.morphisms.push_back({std::to_string(a), "o", "o"});
    for (int b = 0; b < n; ++b) {
      const std::array<std::string, 3> row{
          std::to_string(a), std::to_string(b), std::to_string(mod(a + b, n))};
      m.groupoid.compose.push_back(row);
      t.morphism_product.push_back(row);
    }
  }
  m.group = std::move(t);
  m.canonicalize();
  return m;
}

std::vector<std::string> fixture_names() {
  return {"C3G", "C6G", "L3P", "P2", "P3", "P6"};
}

GgdModel fixture(std::string_view name) {
  GgdModel m;
  if (name == "C3G" || name == "C6G") {
    const int n = name == "C3G" ? 3 : 6;
    m = cyclic_group(n);
    for (int i = 0; i < n; ++i) {
      m.star_edges.push_back(
          {"o", std::to_string(i), std::to_string(mod(i + 1, n))});
    }
    if (n == 6) {
      m.w = std::vector<std::string>{"0", "1", "5"};
    }
  } else if (name == "P3") {
    m = pair_groupoid(3);
    add_pair_edges(m, 3, true);
    m.w = pair_w(3, 1, true);
  } else if (name == "L3P") {
    m = pair_groupoid(3);
    add_pair_edges(m, 3, false);
    m.w = pair_w(3, 1, false);
    m.local = identity_on(*m.w, "P3.ggd");
  } else if (name == "P6") {
    m = pair_groupoid(6);
    add_pair_group(m, 6);
    add_pair_edges(m, 6, true);
    m.w = pair_w(6, 1, true);
    m.local = identity_on(*m.w, "P6.ggd");
  } else if (name == "P2") {
    m = pair_groupoid(2);
    add_pair_group(m, 2);
    add_pair_edges(m, 2, false);
    m.w = pair_w(2, 1, false);
    m.local = identity_on(*m.w, "P2.ggd");
  } else {
    throw Error("unknown fixture " + std::string(name));
  }
  m.canonicalize();
  return m;
}

std::vector<Mutation> mutations(const GgdModel& base, std::size_t count) {
  GgdModel m = base;
  m.canonicalize();
  const auto& morphisms = m.groupoid.morphisms;
  auto position = [&](const std::string& name) {
    return std::find_if(morphisms.begin(), morphisms.end(),
                        [&](const auto& g) { return g.name == name; }) -
           morphisms.begin();
  };
  auto rewire = [&](const std::string& k) {
    const auto n = static_cast<std::ptrdiff_t>(morphisms.size());
    const auto at = position(k);
    for (std::ptrdiff_t step = 1; step < n; ++step) {
      const auto& cand = morphisms[(at + step) % n];
      if (cand.source == morphisms[at].source &&
          cand.target == morphisms[at].target) {
        return cand.name;
      }
    }
    return morphisms[(at + 1) % n].name;
  };

  std::vector<Mutation> out;
  const std::size_t on_product = m.group ? count / 2 : 0;
  const std::size_t on_compose = count - on_product;
  auto spread = [&](auto& rows, std::size_t picks, const char* table,
                    const char* op) {
    for (std::size_t i = 0; i < picks; ++i) {
      const std::size_t row = i * rows.size() / picks;
      Mutation mu{"", m};
      auto& target_rows = &rows == &m.groupoid.compose
                              ? mu.model.groupoid.compose
                              : mu.model.group->morphism_product;
      auto& r = target_rows[row];
      const std::string old = r[2];
      r[2] = rewire(old);
      mu.description = std::string(table) + ": " + r[0] + op + r[1] + " = " +
                       old + " -> " + r[2];
      out.push_back(std::move(mu));
    }
  };
  spread(m.groupoid.compose, on_compose, "compose", "∘");
  if (m.group) {
    spread(m.group->morphism_product, on_product, "morphism-product", "·");
  }
  return out;
}

}  // namespace ggd
