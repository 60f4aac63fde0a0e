#include "hkmon/matrix_type.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hkmon {

  ////////////////////////////////////////////////////////////////////////
  // SandwichEntry
  ////////////////////////////////////////////////////////////////////////

  std::string SandwichEntry::to_string() const {
    if (is_theta()) {
      return "theta";
    }
    switch (*_exponent) {
      case 0:
        return "1";
      case 1:
        return "s";
      default:
        return "s^" + std::to_string(*_exponent);
    }
  }

  SandwichEntry SandwichEntry::parse(std::string_view token) {
    if (token == "theta") {
      return theta();
    }
    if (token == "1") {
      return power(0);
    }
    if (token == "s") {
      return power(1);
    }
    if (token.size() > 2 && token.substr(0, 2) == "s^") {
      std::uint32_t k = 0;
      auto const    digits = token.substr(2);
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), k);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) {
        return power(k);
      }
    }
    throw DomainError("malformed sandwich entry '" + std::string(token)
                      + "' (expected theta, 1, s or s^k)");
  }

  ////////////////////////////////////////////////////////////////////////
  // MatrixTypeData
  ////////////////////////////////////////////////////////////////////////

  MatrixTypeData::MatrixTypeData(std::vector<word_type>     row_labels,
                                 std::vector<word_type>     col_labels,
                                 std::vector<SandwichEntry> entries)
      : _row_labels(std::move(row_labels)),
        _col_labels(std::move(col_labels)),
        _entries(std::move(entries)) {
    auto const n = _row_labels.size();
    if (n == 0) {
      throw DomainError("sandwich matrix must be nonempty");
    }
    if (_col_labels.size() != n) {
      throw DomainError("sandwich matrix is not square: "
                        + std::to_string(n) + " row labels, "
                        + std::to_string(_col_labels.size())
                        + " column labels");
    }
    if (_entries.size() != n * n) {
      throw DomainError("sandwich matrix needs " + std::to_string(n * n)
                        + " entries");
    }
    if (std::none_of(_entries.begin(), _entries.end(),
                     [](SandwichEntry const& e) { return e.is_one(); })) {
      throw DomainError("sandwich matrix has no entry equal to 1");
    }
  }

  bool MatrixTypeData::is_symmetric() const {
    for (std::size_t b = 1; b <= size(); ++b) {
      for (std::size_t a = b + 1; a <= size(); ++a) {
        if (entry(b, a) != entry(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  MatrixTypeData MatrixTypeData::normalized() const {
    auto const n   = size();
    auto const one = std::find_if(_entries.begin(), _entries.end(),
                                  [](SandwichEntry const& e) { return e.is_one(); });
    auto const pos = static_cast<std::size_t>(one - _entries.begin());
    auto const b = pos / n, a = pos % n;
    if (a == 0 && b == 0) {
      return *this;
    }
    MatrixTypeData out = *this;
    std::swap(out._row_labels[0], out._row_labels[b]);
    std::swap(out._col_labels[0], out._col_labels[a]);
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(out._entries[k], out._entries[b * n + k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(out._entries[k * n], out._entries[k * n + a]);
    }
    return out;
  }

  std::vector<std::uint32_t> MatrixTypeData::row_degrees() const {
    std::vector<std::uint32_t> out(size(), 0);
    for (std::size_t b = 1; b <= size(); ++b) {
      for (std::size_t a = 1; a <= size(); ++a) {
        if (!entry(b, a).is_theta()) {
          out[b - 1] = std::max(out[b - 1], entry(b, a).exponent());
        }
      }
    }
    return out;
  }

  MatrixTypeData c3_data(BuiltinData which) {
    auto const one = SandwichEntry::power(0), s = SandwichEntry::power(1),
               z   = SandwichEntry::theta();
    if (which == BuiltinData::m1) {
      return MatrixTypeData({{}, {3}, {3, 1}},
                            {{}, {2}, {1, 2}},
                            {one, one, one, one, one, s, one, s, s});
    }
    return MatrixTypeData({{}, {3}, {3, 2}},
                          {{}, {1}, {2, 1}},
                          {one, one, z, one, z, s, z, s, s});
  }

  word_type c3_generator(BuiltinData which) {
    return which == BuiltinData::m1 ? word_type{3, 1, 2} : word_type{3, 2, 1};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }
  }  // namespace

  MatrixTypeData parse_sandwich(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::size_t                                                   line_no = 0;
    std::istringstream in{std::string(text)};
    std::string        line;
    while (std::getline(in, line)) {
      ++line_no;
      auto toks = tokens(line);
      if (toks.empty() || toks.front().front() == '#') {
        continue;
      }
      lines.emplace_back(line_no, std::move(toks));
    }
    if (lines.empty()) {
      throw ParseError(1, "empty sandwich data");
    }
    auto const& header = lines.front();
    std::size_t n      = 0;
    if (header.second.size() != 2 || header.second[0] != "size"
        || std::from_chars(header.second[1].data(),
                           header.second[1].data() + header.second[1].size(),
                           n)
                   .ec
               != std::errc()
        || n == 0) {
      throw ParseError(header.first, "expected 'size N'");
    }
    if (lines.size() != n + 3) {
      throw ParseError(lines.back().first,
                       "expected " + std::to_string(n + 3)
                           + " non-comment lines, found "
                           + std::to_string(lines.size()));
    }
    auto labels = [&](std::size_t k) {
      auto const& [at, toks] = lines[k];
      if (toks.size() != n) {
        throw ParseError(at, "expected " + std::to_string(n) + " labels");
      }
      std::vector<word_type> out;
      for (auto const& t : toks) {
        try {
          out.push_back(parse_label(t));
        } catch (DomainError const& e) {
          throw ParseError(at, e.what());
        }
      }
      return out;
    };
    auto rows = labels(1);
    auto cols = labels(2);
    std::vector<SandwichEntry> entries;
    for (std::size_t k = 3; k < lines.size(); ++k) {
      auto const& [at, toks] = lines[k];
      if (toks.size() != n) {
        throw ParseError(at, "sandwich matrix is not square: expected "
                                 + std::to_string(n) + " entries");
      }
      for (auto const& t : toks) {
        try {
          entries.push_back(SandwichEntry::parse(t));
        } catch (DomainError const& e) {
          throw ParseError(at, e.what());
        }
      }
    }
    return MatrixTypeData(std::move(rows), std::move(cols), std::move(entries))
        .normalized();
  }

  MatrixTypeData load_data(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw DomainError("cannot open sandwich data '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_sandwich(buffer.str());
  }

  std::string to_text(MatrixTypeData const& d) {
    std::string out = "size " + std::to_string(d.size()) + "\n";
    auto        put = [&out](std::vector<word_type> const& labels) {
      for (std::size_t k = 0; k < labels.size(); ++k) {
        out += (k ? " " : "") + to_label(labels[k]);
      }
      out += '\n';
    };
    put(d.row_labels());
    put(d.col_labels());
    for (std::size_t b = 1; b <= d.size(); ++b) {
      for (std::size_t a = 1; a <= d.size(); ++a) {
        out += (a > 1 ? " " : "") + d.entry(b, a).to_string();
      }
      out += '\n';
    }
    return out;
  }

  void check_cycle_level_size(MatrixTypeData const& d,
                              std::size_t           n,
                              std::size_t           i) {
    if (n < 3 || i > n - 2) {
      throw DomainError("level " + std::to_string(i) + " is not in 0..n-2 for n = "
                        + std::to_string(n));
    }
    std::size_t binom = 1;
    for (std::size_t k = 1; k <= i + 1; ++k) {
      binom = binom * (n - k + 1) / k;
    }
    if (d.size() != binom) {
      throw DomainError("level " + std::to_string(i) + " of C_" + std::to_string(n)
                        + " needs a " + std::to_string(binom) + "x"
                        + std::to_string(binom) + " sandwich matrix, got "
                        + std::to_string(d.size()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements and multiplication
  ////////////////////////////////////////////////////////////////////////

  MatrixTypeElement
  MatrixTypeElement::make(std::uint64_t k, std::size_t a, std::size_t b) {
    if (k == 0) {
      throw DomainError("elements of the semigroup have exponent >= 1");
    }
    if (a == 0 || b == 0) {
      throw DomainError("element indices are 1-based");
    }
    MatrixTypeElement x;
    x._k = k;
    x._a = a;
    x._b = b;
    return x;
  }

  std::string MatrixTypeElement::to_string() const {
    if (is_theta()) {
      return "theta";
    }
    auto const power = _k == 1 ? std::string("s") : "s^" + std::to_string(_k);
    return "(" + power + "; " + std::to_string(_a) + ", " + std::to_string(_b)
           + ")";
  }

  MatrixTypeElement multiply(MatrixTypeElement const& x,
                             MatrixTypeElement const& y,
                             MatrixTypeData const&    d) {
    if (x.is_theta() || y.is_theta()) {
      return MatrixTypeElement::theta();
    }
    for (auto i : {x.row(), x.col(), y.row(), y.col()}) {
      if (i > d.size()) {
        throw DomainError("element index exceeds sandwich size");
      }
    }
    auto const& p = d.entry(x.col(), y.row());
    if (p.is_theta()) {
      return MatrixTypeElement::theta();
    }
    return MatrixTypeElement::make(x.exponent() + y.exponent() + p.exponent(),
                                   x.row(), y.col());
  }

  RationalMatrix evaluate_sandwich(MatrixTypeData const& d,
                                   Rational const&       lambda) {
    if (lambda == 0) {
      throw DomainError("lambda = 0 is excluded: the induced map is the zero map");
    }
    RationalMatrix m(d.size(), d.size());
    for (std::size_t b = 1; b <= d.size(); ++b) {
      for (std::size_t a = 1; a <= d.size(); ++a) {
        auto const& e = d.entry(b, a);
        m(b - 1, a - 1) = e.is_theta() ? Rational(0) : pow(lambda, e.exponent());
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Representations
  ////////////////////////////////////////////////////////////////////////

  Representation::Representation(Rational lambda, Factorization factors)
      : _lambda(std::move(lambda)), _factors(std::move(factors)) {}

  RationalMatrix Representation::image(MatrixTypeElement const& x) const {
    auto const r = dimension();
    if (x.is_theta()) {
      return RationalMatrix(r, r);
    }
    // D E_{a,b} C is the outer product of column a of D and row b of C.
    auto const& C = _factors.left;
    auto const& D = _factors.right;
    if (x.row() > D.cols() || x.col() > C.rows()) {
      throw DomainError("element index exceeds sandwich size");
    }
    return pow(_lambda, static_cast<long>(x.exponent()))
           * (D.col(x.row() - 1) * C.row(x.col() - 1));
  }

  Representation build_rep(MatrixTypeData const& d, Rational const& lambda) {
    return Representation(lambda,
                          full_rank_factorization(evaluate_sandwich(d, lambda)));
  }

  namespace {
    std::vector<MatrixTypeElement> elements_up_to(std::size_t size,
                                                  std::size_t kmax) {
      std::vector<MatrixTypeElement> out{MatrixTypeElement::theta()};
      for (std::size_t k = 1; k <= kmax; ++k) {
        for (std::size_t a = 1; a <= size; ++a) {
          for (std::size_t b = 1; b <= size; ++b) {
            out.push_back(MatrixTypeElement::make(k, a, b));
          }
        }
      }
      return out;
    }
  }  // namespace

  bool verify_homomorphism(Representation const& rep,
                           MatrixTypeData const& d,
                           std::size_t           kmax) {
    if (kmax == 0) {
      throw DomainError("kmax must be at least 1");
    }
    auto const                  elements = elements_up_to(d.size(), kmax);
    std::vector<RationalMatrix> images;
    images.reserve(elements.size());
    for (auto const& x : elements) {
      images.push_back(rep.image(x));
    }
    if (!images.front().is_zero()) {
      return false;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto const product = multiply(elements[i], elements[j], d);
        if (images[i] * images[j] != rep.image(product)) {
          return false;
        }
      }
    }
    return true;
  }

  RationalMatrix
  ExtendedRepresentation::image(long p, std::size_t a, std::size_t b) const {
    if (a == 0 || b == 0 || a > _from_row.size() || b > _to_col.size()) {
      throw DomainError("element index exceeds sandwich size");
    }
    return pow(_lambda, p - 2) * (_from_row[a - 1] * _idempotent * _to_col[b - 1]);
  }

  ExtendedRepresentation extend_rep(Representation const& rep,
                                    MatrixTypeData const& d) {
    if (!d.entry(1, 1).is_one()) {
      throw DomainError("extension needs p_{1,1} = 1 (normalize the data first)");
    }
    ExtendedRepresentation ext;
    ext._lambda     = rep.lambda();
    ext._idempotent = (1 / rep.lambda()) * rep.image(MatrixTypeElement::make(1, 1, 1));
    if (ext._idempotent * ext._idempotent != ext._idempotent
        || rank(ext._idempotent) != 1) {
      throw DomainError("image of (s; 1, 1) is not lambda times a rank one "
                        "idempotent");
    }
    for (std::size_t k = 1; k <= d.size(); ++k) {
      ext._from_row.push_back(rep.image(MatrixTypeElement::make(1, k, 1)));
      ext._to_col.push_back(rep.image(MatrixTypeElement::make(1, 1, k)));
    }
    return ext;
  }

  bool verify_extension(ExtendedRepresentation const& ext,
                        MatrixTypeData const&         d,
                        long                          lo,
                        long                          hi) {
    auto const n = d.size();
    for (long p = lo; p <= hi; ++p) {
      for (long q = lo; q <= hi; ++q) {
        for (std::size_t a = 1; a <= n; ++a) {
          for (std::size_t b = 1; b <= n; ++b) {
            auto const left = ext.image(p, a, b);
            for (std::size_t a2 = 1; a2 <= n; ++a2) {
              auto const& sandwich = d.entry(b, a2);
              for (std::size_t b2 = 1; b2 <= n; ++b2) {
                auto const product = left * ext.image(q, a2, b2);
                if (sandwich.is_theta()) {
                  if (!product.is_zero()) {
                    return false;
                  }
                } else if (product
                           != ext.image(p + q + sandwich.exponent(), a, b2)) {
                  return false;
                }
              }
            }
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Determinant polynomial
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void trim(std::vector<Rational>& p) {
      while (!p.empty() && p.back() == 0) {
        p.pop_back();
      }
    }

    Rational evaluate(std::vector<Rational> const& p, Rational const& x) {
      Rational value = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        value = value * x + *it;
      }
      return value;
    }

    // Quotient of p by (x - root); the remainder is assumed zero.
    std::vector<Rational> deflate(std::vector<Rational> const& p,
                                  Rational const&              root) {
      std::vector<Rational> q(p.size() - 1);
      Rational              carry = 0;
      for (std::size_t k = p.size() - 1; k > 0; --k) {
        carry    = carry * root + p[k];
        q[k - 1] = carry;
      }
      return q;
    }

    std::vector<std::uint64_t> divisors(std::uint64_t m) {
      std::vector<std::uint64_t> small, large;
      for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
          small.push_back(d);
          if (d != m / d) {
            large.push_back(m / d);
          }
        }
      }
      small.insert(small.end(), large.rbegin(), large.rend());
      return small;
    }
  }  // namespace

  std::vector<Rational> sandwich_determinant(MatrixTypeData const& d) {
    std::size_t degree = 0;
    for (auto k : d.row_degrees()) {
      degree += k;
    }
    // Newton interpolation through lambda = 1, ..., degree + 1.
    std::vector<Rational> xs, cs;
    for (std::size_t k = 0; k <= degree; ++k) {
      xs.emplace_back(static_cast<long>(k + 1));
      cs.push_back(determinant(evaluate_sandwich(d, xs.back())));
    }
    for (std::size_t j = 1; j <= degree; ++j) {
      for (std::size_t i = degree; i >= j; --i) {
        cs[i] = (cs[i] - cs[i - 1]) / (xs[i] - xs[i - j]);
      }
    }
    std::vector<Rational> poly{cs[degree]};
    for (std::size_t i = degree; i-- > 0;) {
      // poly = poly * (x - xs[i]) + cs[i]
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= poly[k] * xs[i];
      }
      next[0] += cs[i];
      poly = std::move(next);
    }
    trim(poly);
    return poly;
  }

  std::string polynomial_to_string(std::vector<Rational> const& coeffs) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      auto c = coeffs[k];
      if (c == 0) {
        continue;
      }
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      c = c < 0 ? Rational(-c) : c;
      auto const mag = hkmon::to_string(c);
      if (k == 0) {
        out += mag;
      } else {
        if (c != 1) {
          out += mag + "*";
        }
        out += k == 1 ? std::string("lambda") : "lambda^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

  RationalRoots nonzero_rational_roots(std::vector<Rational> const& coeffs) {
    RationalRoots result;
    auto          p = coeffs;
    trim(p);
    if (p.empty()) {
      result.complete = false;
      return result;
    }
    while (p.front() == 0) {
      p.erase(p.begin());
    }
    // Clear denominators.
    Integer common = 1;
    for (auto const& c : p) {
      common = boost::multiprecision::lcm(common,
                                          boost::multiprecision::denominator(c));
    }
    for (auto& c : p) {
      c *= common;
    }
    auto const bound = Integer(1) << 40;
    Integer    a0    = abs(boost::multiprecision::numerator(p.front()));
    Integer    ad    = abs(boost::multiprecision::numerator(p.back()));
    if (a0 > bound || ad > bound) {
      result.complete = p.size() == 1;
      return result;
    }
    std::set<Rational> found;
    for (auto num : divisors(static_cast<std::uint64_t>(a0))) {
      for (auto den : divisors(static_cast<std::uint64_t>(ad))) {
        for (int sign : {-1, 1}) {
          Rational candidate(Integer(sign) * Integer(num), Integer(den));
          while (p.size() > 1 && evaluate(p, candidate) == 0) {
            found.insert(candidate);
            p = deflate(p, candidate);
          }
        }
      }
    }
    result.roots.assign(found.begin(), found.end());
    result.complete = p.size() == 1;
    return result;
  }

  nlohmann::ordered_json to_json(Representation const& rep,
                                 MatrixTypeData const& d) {
    nlohmann::ordered_json out;
    out["lambda"]     = to_string(rep.lambda());
    out["dim"]        = rep.dimension();
    auto& generators = out["generators"] = nlohmann::ordered_json::array();
    for (std::size_t a = 1; a <= d.size(); ++a) {
      for (std::size_t b = 1; b <= d.size(); ++b) {
        auto const x = MatrixTypeElement::make(1, a, b);
        generators.push_back({{"element", x.to_string()},
                              {"matrix", rep.image(x).to_strings()}});
      }
    }
    return out;
  }

}  // namespace hkmon
