#include <cmath>
#include <cstdio>
#include <random>

#include "citemetrics/corpus.hpp"
#include "citemetrics/errors.hpp"

namespace citemetrics {

namespace {

constexpr Year kFirstYear = 1970;
constexpr Year kLastYear = 2024;
constexpr Count kMaxCitationsPerPaper = 2000;

// Distribution helpers written against the raw engine so the output does not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  std::int64_t poisson(double mean) {
    if (mean < 30.0) {
      const double limit = std::exp(-mean);
      std::int64_t k = 0;
      double product = uniform();
      while (product > limit) {
        ++k;
        product *= uniform();
      }
      return k;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return std::max<std::int64_t>(0, std::llround(mean + std::sqrt(mean) * z));
  }

  // Pareto with x_min = 1, shifted down by one so zero citations are common.
  Count power_law(double exponent) {
    const double x = std::pow(1.0 - uniform(), -1.0 / (exponent - 1.0));
    if (!(x < static_cast<double>(kMaxCitationsPerPaper + 1))) return kMaxCitationsPerPaper;
    return static_cast<Count>(std::floor(x)) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

std::string numbered(const char* prefix, std::int64_t n, int width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*lld", prefix, width, static_cast<long long>(n));
  return buf;
}

}  // namespace

Corpus synth_corpus(const SynthParams& params) {
  if (params.num_fields < 1) throw InvalidInputError("num_fields must be positive");
  if (params.researchers_per_field < 1) throw InvalidInputError("researchers_per_field must be positive");
  if (!(params.pubs_mean > 0.0) || !std::isfinite(params.pubs_mean)) {
    throw InvalidInputError("pubs_mean must be a positive finite number");
  }
  if (!(params.citation_exponent > 1.0) || !std::isfinite(params.citation_exponent)) {
    throw InvalidInputError("citation_exponent must be finite and greater than 1");
  }
  if (params.num_fields * params.researchers_per_field > 1'000'000) {
    throw InvalidInputError("corpus too large: at most 1000000 researchers");
  }

  Rng rng(params.seed);
  Corpus::Parts parts;
  const std::int64_t total_researchers = params.num_fields * params.researchers_per_field;

  std::vector<AuthorId> pool;
  for (std::int64_t f = 1; f <= params.num_fields; ++f) {
    for (std::int64_t r = 1; r <= params.researchers_per_field; ++r) {
      pool.push_back(numbered("f", f, 3) + numbered("-r", r, 4));
    }
  }
  for (std::int64_t x = 1; x <= total_researchers; ++x) pool.push_back(numbered("x", x, 6));

  std::int64_t citing_serial = 0;
  for (std::int64_t f = 1; f <= params.num_fields; ++f) {
    const FieldId field = numbered("f", f, 3);
    parts.fields.push_back({field, "Field " + std::to_string(f)});

    for (std::int64_t r = 1; r <= params.researchers_per_field; ++r) {
      const auto& rid = pool[static_cast<std::size_t>((f - 1) * params.researchers_per_field + r - 1)];
      const auto first_year = static_cast<Year>(rng.between(kFirstYear, kLastYear - 5));
      parts.researchers.push_back({rid, "Researcher " + rid, field, first_year, {}});

      const auto pubs = rng.poisson(params.pubs_mean);
      for (std::int64_t p = 1; p <= pubs; ++p) {
        Publication pub;
        pub.id = rid + numbered("-p", p, 4);
        pub.owner = rid;
        pub.year = static_cast<Year>(rng.between(first_year, kLastYear));
        const Count cites = rng.power_law(params.citation_exponent);
        if (rng.between(0, 3) == 0) pub.explicit_count = cites;

        for (Count c = 0; c < cites; ++c) {
          CitationEvent event;
          event.cited_pub = pub.id;
          event.citing_pub = numbered("c", ++citing_serial, 9);
          // Roughly 3% of events carry no author list.
          const auto author_count = rng.between(0, 99) < 3 ? 0 : rng.between(1, 3);
          for (std::int64_t a = 0; a < author_count; ++a) {
            event.citing_authors.push_back(pool[static_cast<std::size_t>(rng.between(0, std::ssize(pool) - 1))]);
          }
          event.year = static_cast<Year>(rng.between(pub.year, kLastYear + 1));
          parts.citations.push_back(std::move(event));
        }
        parts.publications.push_back(std::move(pub));
      }

      const auto links = rng.between(0, 2);
      for (std::int64_t l = 0; l < links; ++l) {
        const auto& other = pool[static_cast<std::size_t>(rng.between(0, std::ssize(pool) - 1))];
        if (other != rid) parts.coauthorships.emplace_back(rid, other);
      }
    }
  }
  return Corpus::assemble(std::move(parts));
}

}  // namespace citemetrics
