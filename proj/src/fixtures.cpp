#include "hqft/fixtures.hpp"

#include "hqft/errors.hpp"

namespace hqft::fixtures {

namespace {

std::vector<std::vector<int>> torus_triangles() {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return t;
}

std::vector<std::vector<int>> rp2_triangles() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
}

}  // namespace

ComplexPtr point() { return build_complex({{0}}); }

ComplexPtr circle() { return build_complex({{0, 1}, {1, 2}, {0, 2}}); }

ComplexPtr sphere() { return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

ComplexPtr torus() { return build_complex(torus_triangles()); }

ComplexPtr projective_plane() { return build_complex(rp2_triangles()); }

ComplexPtr wedge() {
  auto t = rp2_triangles();
  t.push_back({0, 6});
  t.push_back({6, 7});
  t.push_back({0, 7});
  t.push_back({0, 8, 9});
  t.push_back({0, 8, 10});
  t.push_back({0, 9, 10});
  t.push_back({8, 9, 10});
  return build_complex(t);
}

ComplexPtr ball() { return build_complex({{0, 1, 2, 3}, {0, 1, 2, 4}}); }

ComplexPtr by_name(const std::string& name) {
  if (name == "point") return point();
  if (name == "circle") return circle();
  if (name == "sphere") return sphere();
  if (name == "torus") return torus();
  if (name == "rp2") return projective_plane();
  if (name == "wedge") return wedge();
  if (name == "ball") return ball();
  throw MalformedInput("unknown fixture '" + name + "'");
}

std::vector<std::string> names() { return {"point", "circle", "sphere", "torus", "rp2", "wedge", "ball"}; }

}  // namespace hqft::fixtures
