#include "oracles.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Token {
  int crossing;
  bool over;
  int sign;
};

std::vector<Token> tokenize(const std::string& code) {
  std::vector<Token> out;
  std::istringstream in(code);
  std::string tok;
  while (in >> tok) {
    out.push_back({std::stoi(tok.substr(1, tok.size() - 2)), tok[0] == 'O', tok.back() == '+' ? 1 : -1});
  }
  return out;
}

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return 1;
  }
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return 0;
      }
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Coefficients c_0..c_{d} of the polynomial through (x_i, y_i).
std::vector<Rational> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j).
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        continue;
      }
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < basis.size() && k < n; ++k) {
      result[k] += basis[k] * Rational(ys[i]) / denom;
    }
  }
  return result;
}

}  // namespace

std::string braid_closure_code(const Braid& braid, int strands) {
  std::vector<Token> tokens;
  int position = 1;
  for (int pass = 0; pass < strands; ++pass) {
    for (std::size_t k = 0; k < braid.size(); ++k) {
      const int letter = braid[k];
      const int left = letter > 0 ? letter : -letter;
      if (position != left && position != left + 1) {
        continue;
      }
      const bool from_left = position == left;
      // sigma_i: the strand coming from the left passes over.
      const bool over = letter > 0 ? from_left : !from_left;
      tokens.push_back({static_cast<int>(k) + 1, over, letter > 0 ? 1 : -1});
      position = from_left ? left + 1 : left;
    }
    if (position == 1) {
      if (pass + 1 != strands) {
        throw std::invalid_argument("braid closure has more than one component");
      }
      break;
    }
  }
  if (position != 1) {
    throw std::invalid_argument("braid closure has more than one component");
  }
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) {
      out += ' ';
    }
    out += (t.over ? 'O' : 'U') + std::to_string(t.crossing) + (t.sign > 0 ? '+' : '-');
  }
  return out;
}

std::vector<BigInt> alexander(const std::string& code) {
  const auto tokens = tokenize(code);
  std::map<int, std::size_t> index;
  for (const auto& t : tokens) {
    index.try_emplace(t.crossing, index.size());
  }
  const std::size_t n = index.size();
  if (n < 2) {
    return {1};
  }
  // Arc number at each word position: under-passages seen so far, mod n.
  std::vector<std::size_t> arc(tokens.size());
  std::size_t unders = 0;
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    arc[p] = unders % n;
    if (!tokens[p].over) {
      ++unders;
    }
  }
  struct Row {
    std::size_t over = 0, in = 0, out = 0;
    int sign = 1;
  };
  std::vector<Row> rows(n);
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    Row& r = rows[index.at(tokens[p].crossing)];
    r.sign = tokens[p].sign;
    if (tokens[p].over) {
      r.over = arc[p];
    } else {
      r.in = arc[p];
      r.out = (arc[p] + 1) % n;
    }
  }
  std::vector<BigInt> xs;
  std::vector<BigInt> ys;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt t = static_cast<long>(i) + 2;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
      const Row& r = rows[c];
      if (r.sign > 0) {
        m[c][r.over] += 1 - t;
        m[c][r.in] += t;
        m[c][r.out] += -1;
      } else {
        m[c][r.over] += t - 1;
        m[c][r.in] += 1;
        m[c][r.out] += -t;
      }
    }
    std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
    for (std::size_t a = 0; a + 1 < n; ++a) {
      for (std::size_t b = 0; b + 1 < n; ++b) {
        minor[a][b] = m[a][b];
      }
    }
    xs.push_back(t);
    ys.push_back(bareiss_determinant(minor));
  }
  const auto coeffs = interpolate(xs, ys);
  std::vector<BigInt> ints;
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) {
      throw std::runtime_error("Alexander interpolation is not integral");
    }
    ints.push_back(numerator(c));
  }
  std::size_t lo = 0;
  while (lo < ints.size() && ints[lo] == 0) {
    ++lo;
  }
  std::size_t hi = ints.size();
  while (hi > lo && ints[hi - 1] == 0) {
    --hi;
  }
  std::vector<BigInt> trimmed(ints.begin() + static_cast<std::ptrdiff_t>(lo),
                              ints.begin() + static_cast<std::ptrdiff_t>(hi));
  BigInt at_one = 0;
  for (const auto& c : trimmed) {
    at_one += c;
  }
  if (at_one == -1) {
    for (auto& c : trimmed) {
      c = -c;
    }
  } else if (at_one != 1) {
    throw std::runtime_error("Alexander polynomial does not evaluate to +-1");
  }
  return trimmed;
}

BigInt conway_a2(const std::string& code) {
  const auto coeffs = alexander(code);
  const long half = static_cast<long>(coeffs.size() - 1) / 2;
  BigInt sum = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const long e = static_cast<long>(k) - half;
    sum += coeffs[k] * e * e;
  }
  return sum / 2;
}

}  // namespace oracles
