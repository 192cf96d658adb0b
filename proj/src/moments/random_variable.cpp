#include <algorithm>
#include <charconv>
#include <set>

#include "spivey/moments.hpp"

namespace spivey {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate(const Distribution& d) {
  std::visit(Overloaded{
                 [](const dist::Point&) {},
                 [](const dist::FiniteDiscrete& f) {
                   require(!f.support.empty(), "finite: empty support");
                   Rational total = 0;
                   std::set<Rational> seen;
                   for (const auto& [value, prob] : f.support) {
                     require(prob > 0, "finite: probability " + to_string(prob) + " is not positive");
                     require(seen.insert(value).second, "finite: duplicate atom " + to_string(value));
                     total += prob;
                   }
                   require(total == 1, "finite: probabilities sum to " + to_string(total) + ", not 1");
                 },
                 [](const dist::Bernoulli& b) {
                   require(b.p > 0 && b.p <= 1, "bernoulli: p must satisfy 0 < p <= 1");
                 },
                 [](const dist::Binomial& b) {
                   require(b.trials >= 1, "binomial: need at least one trial");
                   require(b.p >= 0 && b.p <= 1, "binomial: p must satisfy 0 <= p <= 1");
                 },
                 [](const dist::Poisson& p) { require(p.rate > 0, "poisson: rate must be positive"); },
                 [](const dist::Geometric& g) {
                   require(g.p > 0 && g.p <= 1, "geometric: p must satisfy 0 < p <= 1");
                 },
             },
             d);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Rational rational_token(std::string_view token, std::string_view whole) {
  try {
    return parse_rational(token);
  } catch (const std::invalid_argument&) {
    throw RvParseError("bad number '" + std::string(token) + "' in '" + std::string(whole) + "'");
  }
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t n, std::string_view whole) {
  if (fields.size() != n) {
    throw RvParseError("'" + std::string(fields.front()) + "' takes " + std::to_string(n - 1) +
                       " parameter(s) in '" + std::string(whole) + "'");
  }
}

}  // namespace

RandomVariableModel::RandomVariableModel(Distribution distribution)
    : distribution_(std::move(distribution)), cache_(std::make_shared<MomentCache>()) {
  validate(distribution_);
  if (auto* f = std::get_if<dist::FiniteDiscrete>(&distribution_)) {
    std::sort(f->support.begin(), f->support.end());
  }
}

RandomVariableModel RandomVariableModel::point(Rational value) {
  return RandomVariableModel(dist::Point{std::move(value)});
}
RandomVariableModel RandomVariableModel::finite(std::vector<std::pair<Rational, Rational>> support) {
  return RandomVariableModel(dist::FiniteDiscrete{std::move(support)});
}
RandomVariableModel RandomVariableModel::bernoulli(Rational p) {
  return RandomVariableModel(dist::Bernoulli{std::move(p)});
}
RandomVariableModel RandomVariableModel::binomial(unsigned trials, Rational p) {
  return RandomVariableModel(dist::Binomial{trials, std::move(p)});
}
RandomVariableModel RandomVariableModel::poisson(Rational rate) {
  return RandomVariableModel(dist::Poisson{std::move(rate)});
}
RandomVariableModel RandomVariableModel::geometric(Rational p) {
  return RandomVariableModel(dist::Geometric{std::move(p)});
}

std::string RandomVariableModel::spec() const {
  return std::visit(Overloaded{
                        [](const dist::Point& d) { return "point:" + to_string(d.value); },
                        [](const dist::FiniteDiscrete& d) {
                          std::string out = "finite:{";
                          for (std::size_t i = 0; i < d.support.size(); ++i) {
                            if (i > 0) out += ",";
                            out += to_string(d.support[i].first) + ":" + to_string(d.support[i].second);
                          }
                          return out + "}";
                        },
                        [](const dist::Bernoulli& d) { return "bernoulli:" + to_string(d.p); },
                        [](const dist::Binomial& d) {
                          return "binomial:" + std::to_string(d.trials) + ":" + to_string(d.p);
                        },
                        [](const dist::Poisson& d) { return "poisson:" + to_string(d.rate); },
                        [](const dist::Geometric& d) { return "geometric:" + to_string(d.p); },
                    },
                    distribution_);
}

bool RandomVariableModel::has_negative_support() const {
  if (const auto* p = std::get_if<dist::Point>(&distribution_)) return p->value < 0;
  if (const auto* f = std::get_if<dist::FiniteDiscrete>(&distribution_)) {
    return std::any_of(f->support.begin(), f->support.end(), [](const auto& a) { return a.first < 0; });
  }
  return false;
}

RandomVariableModel parse_rv(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (colon == std::string_view::npos) {
    throw RvParseError("missing ':' after '" + std::string(kind) + "'");
  }
  const std::string_view rest = text.substr(colon + 1);

  try {
    if (kind == "finite") {
      if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
        throw RvParseError("expected '{value:prob,...}' but got '" + std::string(rest) + "'");
      }
      std::vector<std::pair<Rational, Rational>> support;
      for (std::string_view atom : split(rest.substr(1, rest.size() - 2), ',')) {
        const auto parts = split(atom, ':');
        if (parts.size() != 2) {
          throw RvParseError("bad atom '" + std::string(atom) + "' in '" + std::string(text) + "'");
        }
        support.emplace_back(rational_token(parts[0], text), rational_token(parts[1], text));
      }
      return RandomVariableModel::finite(std::move(support));
    }

    auto fields = split(text, ':');
    if (kind == "point") {
      expect_fields(fields, 2, text);
      return RandomVariableModel::point(rational_token(fields[1], text));
    }
    if (kind == "bernoulli") {
      expect_fields(fields, 2, text);
      return RandomVariableModel::bernoulli(rational_token(fields[1], text));
    }
    if (kind == "binomial") {
      expect_fields(fields, 3, text);
      unsigned trials = 0;
      const auto tok = fields[1];
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), trials);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw RvParseError("bad trial count '" + std::string(tok) + "' in '" + std::string(text) + "'");
      }
      return RandomVariableModel::binomial(trials, rational_token(fields[2], text));
    }
    if (kind == "poisson") {
      expect_fields(fields, 2, text);
      return RandomVariableModel::poisson(rational_token(fields[1], text));
    }
    if (kind == "geometric") {
      expect_fields(fields, 2, text);
      return RandomVariableModel::geometric(rational_token(fields[1], text));
    }
  } catch (const RvParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw RvParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
  throw RvParseError("unknown distribution '" + std::string(kind) + "' in '" + std::string(text) + "'");
}

std::vector<RandomVariableModel> standard_rv_suite() {
  return {
      RandomVariableModel::point(1),
      RandomVariableModel::point(Rational(3, 2)),
      RandomVariableModel::bernoulli(Rational(1, 2)),
      RandomVariableModel::finite({{1, Rational(1, 3)}, {2, Rational(2, 3)}}),
      RandomVariableModel::poisson(1),
      RandomVariableModel::geometric(Rational(1, 2)),
  };
}

}  // namespace spivey
