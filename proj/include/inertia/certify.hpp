#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inertia/fibermap.hpp"
#include "inertia/hypersurface.hpp"
#include "inertia/point.hpp"
#include "inertia/words.hpp"

namespace inertia {

enum class Status { Verified, Refuted, Inconclusive };

const char* to_string(Status s);

/// Ambient stand-in used when an I letter must act on points: T and S agree
/// on X, so either lift evaluates a restricted word there.
enum class Lift { Tau, Sigma };

/// Outcome of a randomized or symbolic certificate. Every verdict carries
/// enough to replay it: the seed, the word, and the witness coordinates.
struct Verdict {
    Status status = Status::Inconclusive;
    std::string check;
    std::optional<std::size_t> axis; // 0-based
    std::string word_echo;
    std::uint64_t seed = 0;
    std::size_t trials_used = 0;
    std::size_t indeterminate_hits = 0;
    std::string detail;
    std::optional<std::size_t> witness_trial;
    std::optional<Point> witness_before;
    std::optional<Point> witness_after;

    std::string to_text() const;
    int exit_code() const; // 0 verified, 1 refuted, 2 inconclusive
};

struct WordEval {
    std::optional<Point> point;
    std::optional<std::size_t> indeterminate_letter; // index into the word

    bool indeterminate() const { return !point.has_value(); }
};

/// Ambient word acting like a restricted one: each I letter becomes its
/// lift's letter on the same axis.
Word lift_restricted(const Word& w, Lift lift);

/// One fiber map per letter, built against X (I letters via the lift).
std::vector<FiberMap> instantiate_word(const Word& w, const MultiQuadric& x,
                                       Lift lift = Lift::Tau);

/// Applies the letters right to left (leftmost acts last); stops at the
/// first letter whose map is indeterminate at the current point.
WordEval evaluate_letters(const std::vector<FiberMap>& maps, const Point& p);
WordEval evaluate_word(const Word& w, const Point& p, const MultiQuadric& x,
                       Lift lift = Lift::Tau);

/// Checks that R and R^-1 on the given axis fix sampled points of X
/// projectively. Requires a prime field. Resamples indeterminate hits up to
/// an attempt cap of max(4*trials, trials + 32).
Verdict certify_inertia(const MultiQuadric& x, std::size_t axis, std::size_t trials,
                        std::uint64_t seed);

/// Same check against caller-supplied forward/backward maps; lets tests and
/// the CLI corrupt a map and watch the certificate refute it.
Verdict certify_inertia_maps(const MultiQuadric& x, std::size_t axis, const FiberMap& fwd,
                             const FiberMap& bwd, std::size_t trials, std::uint64_t seed);

/// Checks that T and S agree on sampled points of X, land on X, fix the
/// other coordinates bitwise, and move the point unless its fiber is a
/// double root.
Verdict certify_tau_sigma_agree(const MultiQuadric& x, std::size_t axis, std::size_t trials,
                                std::uint64_t seed);

/// Symbolic infinite-order certificate: no power R^k, k = 1..k_max, is a
/// scalar matrix. A vanishing axis discriminant is flagged as inconclusive
/// before any power is taken.
Verdict order_check(const MultiQuadric& x, std::size_t axis, std::uint64_t k_max);

/// Searches for a point moved by a reduced nonempty R word: first the two
/// structured candidates (leftmost-letter axis coordinate 0, then infinity,
/// with random other coordinates), then fully random points, skipping
/// candidates on X. Verified means a moving witness was found.
Verdict certify_nontrivial(const Word& w, const MultiQuadric& x, std::size_t trials,
                           std::uint64_t seed);

/// Compares the pointwise action of an I word on sampled points of X with
/// the prediction of its uc-reduced form: reduced empty iff every
/// non-indeterminate sample is fixed.
Verdict uc_oracle_check(const Word& w, const MultiQuadric& x, std::size_t trials,
                        std::uint64_t seed, Lift lift = Lift::Tau);

} // namespace inertia
