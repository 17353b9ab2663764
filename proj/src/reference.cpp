#include "qhopf/reference.hpp"

#include <stdexcept>

namespace qhopf {

namespace {

M2CompatCell dash() { return {}; }
M2CompatCell z(int e) { return {true, e, {}, false}; }
M2CompatCell zc(int e, std::string c) { return {true, e, {std::move(c)}, false}; }
M2CompatCell z6(int e) { return {true, e, {}, true}; }

}  // namespace

M2CompatCell m2_compat_reference(int row_j, int row_i) {
  if (row_j < 1 || row_j > 8 || row_i < 1 || row_i > 8) throw std::out_of_range("M_2 rows are 1..8");
  // clang-format off
  static const std::vector<std::vector<M2CompatCell>> t = {
      {dash(), z(0), dash(), dash(), z(0), zc(-2, "delta_i = 0"), dash(), z(-2)},
      {z(0), dash(), dash(), z(0), dash(), zc(-2, "epsilon_i = 0"), dash(), z(-2)},
      {dash(), dash(), dash(), zc(-2, "epsilon_j = 0"), zc(-2, "delta_j = 0"), z(2), z6(-4), dash()},
      {dash(), z(0), zc(2, "epsilon_i = 0"), dash(), z(0), dash(), z(2), dash()},
      {z(0), dash(), zc(2, "delta_i = 0"), z(0), dash(), dash(), z(2), dash()},
      {zc(2, "delta_j = 0"), zc(2, "epsilon_j = 0"), z(-2), dash(), dash(), dash(), dash(), z6(4)},
      {dash(), dash(), z6(4), z(-2), z(-2), dash(), dash(), dash()},
      {z(2), z(2), dash(), dash(), dash(), z6(-4), dash(), dash()},
  };
  // clang-format on
  return t[row_j - 1][row_i - 1];
}

std::vector<MnLabel> mn_catalog_labels(int N) {
  std::vector<MnLabel> v;
  for (int b = 2; b <= N; ++b) v.push_back({1, b});
  for (int a = 2; a <= N; ++a) v.push_back({2, a});
  v.push_back({3, 0});
  v.push_back({4, 0});
  for (int b = 1; b < N; ++b) v.push_back({5, b});
  for (int a = 1; a < N; ++a) v.push_back({6, a});
  v.push_back({7, 0});
  v.push_back({8, 0});
  return v;
}

std::optional<int> mn_compat_reference(const MnLabel& j, const MnLabel& i, int N) {
  int rj = j.row, xj = j.index, ri = i.row, xi = i.index;
  auto in = [](int x, int s, int t) { return x == s || x == t ? 1 : 0; };
  auto cond = [](bool c, int e) { return c ? std::optional<int>(e) : std::nullopt; };
  auto diff = [](int a, int b) { return a > b ? a - b : b - a; };
  switch (rj * 10 + ri) {
    case 11: return cond(diff(xi, xj) > 1, 0);
    case 12: return 0;
    case 13: return cond(2 < xj && xj < N, 0);
    case 14: return cond(2 < xj && xj <= N, 0);
    case 15: return cond(xj != xi + 1, -in(xj, xi, xi + 2));
    case 16: return 0;
    case 17: return cond(2 <= xj && xj < N, 0);
    case 18: return -in(xj, 2, N);
    case 21: return 0;
    case 22: return cond(diff(xi, xj) > 1, 0);
    case 23: return cond(2 < xj && xj <= N, 0);
    case 24: return cond(2 < xj && xj < N, 0);  // printed with b_j; row 2 carries a
    case 25: return 0;
    case 26: return cond(xj != xi + 1, -in(xj, xi, xi + 2));
    case 27: return -in(xj, 2, N);
    case 28: return cond(2 <= xj && xj < N, 0);
    case 31: return cond(2 < xi && xi < N, 0);
    case 32: return cond(2 < xi && xi <= N, 0);
    case 35: return -in(xi, 1, N - 1);
    case 36: return cond(1 < xi && xi <= N - 1, 0);
    case 37:
    case 38: return 2;
    case 41: return cond(2 < xi && xi <= N, 0);
    case 42: return cond(2 < xi && xi < N, 0);
    case 45: return cond(1 < xi && xi <= N - 1, 0);
    case 46: return -in(xi, 1, N - 1);
    case 47:
    case 48: return 2;
    case 51: return cond(xi != xj + 1, in(xi, xj, xj + 2));
    case 52: return 0;
    case 53: return in(xj, 1, N - 1);
    case 54: return cond(1 < xj && xj <= N - 1, 0);
    case 55: return cond(diff(xi, xj) > 1, 0);
    case 56: return 0;
    case 57: return cond(1 <= xj && xj < N - 1, 0);
    case 58: return cond(1 < xj && xj < N - 1, 0);
    case 61: return 0;
    case 62: return cond(xi != xj + 1, in(xi, xj, xj + 2));
    case 63: return cond(1 < xj && xj <= N - 1, 0);
    case 64: return in(xj, 1, N - 1);
    case 65: return 0;
    case 66: return cond(diff(xi, xj) > 1, 0);
    case 67: return cond(1 < xj && xj < N - 1, 0);
    case 68: return cond(1 <= xj && xj < N - 1, 0);
    case 71: return cond(2 <= xi && xi < N, 0);
    case 72: return in(xi, 2, N);
    case 73:
    case 74: return -2;
    case 75: return cond(1 <= xi && xi < N - 1, 0);
    case 76: return cond(1 < xi && xi < N - 1, 0);
    case 81: return in(xi, 2, N);
    case 82: return cond(2 <= xi && xi < N, 0);
    case 83:
    case 84: return -2;
    case 85: return cond(1 < xi && xi < N - 1, 0);
    case 86: return cond(1 <= xi && xi < N - 1, 0);
    default: return std::nullopt;  // the two "---" blocks
  }
}

std::vector<int> m2_det_stable_rows() { return {1, 2, 4, 5}; }
std::vector<int> mn_det_stable_rows() { return {1, 2, 5, 6}; }

}  // namespace qhopf
