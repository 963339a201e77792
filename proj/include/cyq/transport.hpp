#pragma once

#include "cyq/groups.hpp"

#include <cmath>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace cyq {

inline constexpr long long kSequenceCeiling = 10'000'000;

/// Observed states at strictly increasing integer times.
struct ObservationSequence {
    std::vector<long long> times;
    std::vector<CycVector> states;
};

inline ObservationSequence make_observation_sequence(std::vector<long long> times,
                                                     std::vector<CycVector> states) {
    if (times.size() != states.size() || times.size() < 2)
        throw std::invalid_argument("observation sequence: need matching times/states, at least two");
    if (times.front() < 0) throw std::invalid_argument("observation sequence: t0 must be nonnegative");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("observation sequence: times must be strictly increasing");
    const Index dim = states.front().size();
    for (const CycVector& s : states) {
        if (s.size() != dim) throw std::invalid_argument("observation sequence: state dimensions differ");
        if (inner(s, s).is_zero()) throw std::domain_error("observation sequence: zero state");
    }
    return {std::move(times), std::move(states)};
}

/// Number of gauge sequences of a given length, M^delta_t.
inline BigInt sequence_count(std::size_t alphabet, long delta_t) {
    if (alphabet < 1 || delta_t < 1)
        throw std::invalid_argument("sequence_count: alphabet and delta_t must be positive");
    return pow_bigint(BigInt(static_cast<unsigned long>(alphabet)), static_cast<unsigned long>(delta_t));
}

/// Lexicographic decode: digit 0 is the most significant.
inline std::vector<int> sequence_at(std::size_t alphabet, long delta_t, BigInt index) {
    if (index < 0 || index >= sequence_count(alphabet, delta_t))
        throw std::invalid_argument("sequence_at: index out of range");
    std::vector<int> gamma(static_cast<std::size_t>(delta_t));
    const BigInt m(static_cast<unsigned long>(alphabet));
    for (std::size_t j = gamma.size(); j-- > 0;) {
        gamma[j] = static_cast<int>(index % m);
        index /= m;
    }
    return gamma;
}

/// Visits all M^delta_t sequences in lexicographic (index) order.
template <typename Fn>
void for_each_sequence(std::size_t alphabet, long delta_t, Fn&& fn,
                       long long ceiling = kSequenceCeiling) {
    const BigInt total = sequence_count(alphabet, delta_t);
    if (total > ceiling)
        throw resource_error("for_each_sequence: " + total.str() + " sequences exceed the ceiling");
    std::vector<int> gamma(static_cast<std::size_t>(delta_t), 0);
    const int top = static_cast<int>(alphabet) - 1;
    while (true) {
        fn(std::span<const int>(gamma));
        std::size_t pos = gamma.size();
        while (pos > 0 && gamma[pos - 1] == top) gamma[--pos] = 0;
        if (pos == 0) break;
        ++gamma[pos - 1];
    }
}

/// Parallel transport of a sequence: the ordered product of its elements.
inline CycMatrix sequence_value(std::span<const int> gamma, const GeneratedRep& rep) {
    if (gamma.empty()) throw std::invalid_argument("sequence_value: empty sequence");
    CycMatrix value = cyc_identity(rep.degree);
    for (int g : gamma) value = value * rep.matrix(static_cast<std::size_t>(g));
    return value;
}

/// Weighted bunch of gauge sequences over one interval. Weights are sparse
/// (index -> weight), nonnegative, and must sum to exactly 1; unnormalized
/// weights would let "probabilities" exceed 1.
struct TransportBunch {
    GeneratedRep elements;
    long delta_t = 1;
    std::map<BigInt, Rational> weights;
};

inline TransportBunch make_bunch(GeneratedRep elements, long delta_t,
                                 std::map<BigInt, Rational> weights) {
    if (delta_t < 1) throw std::invalid_argument("make_bunch: delta_t must be positive");
    if (elements.generators.empty()) throw std::invalid_argument("make_bunch: empty alphabet");
    const BigInt total = sequence_count(elements.size(), delta_t);
    Rational sum(0);
    for (const auto& [index, weight] : weights) {
        if (index < 0 || index >= total) throw std::invalid_argument("make_bunch: weight index out of range");
        if (weight < 0) throw std::domain_error("make_bunch: negative weight");
        sum += weight;
    }
    if (sum != 1) throw std::domain_error("make_bunch: weights must sum to 1");
    return {std::move(elements), delta_t, std::move(weights)};
}

/// All weight on the constant sequence (g, g, ..., g).
inline TransportBunch delta_bunch(std::size_t g_index, long delta_t, GeneratedRep elements) {
    if (g_index >= elements.size()) throw std::invalid_argument("delta_bunch: element index out of range");
    const std::size_t m = elements.size();
    BigInt index(0);
    for (long j = 0; j < delta_t; ++j) index = index * static_cast<unsigned long>(m) + static_cast<unsigned long>(g_index);
    std::map<BigInt, Rational> weights{{index, Rational(1)}};
    return make_bunch(std::move(elements), delta_t, std::move(weights));
}

/// Equal weight 1/M^delta_t on every sequence (dense; ceiling-guarded).
inline TransportBunch uniform_bunch(GeneratedRep elements, long delta_t,
                                    long long ceiling = kSequenceCeiling) {
    const BigInt total = sequence_count(elements.size(), delta_t);
    if (total > ceiling) throw resource_error("uniform_bunch: sequence space exceeds the ceiling");
    const Rational w = Rational(1) / Rational(total);
    std::map<BigInt, Rational> weights;
    for (BigInt k(0); k < total; ++k) weights.emplace(k, w);
    return make_bunch(std::move(elements), delta_t, std::move(weights));
}

/// P(prev -> next) = sum_k w_k * born(next, Value(gamma_k) prev), iterating
/// only the sequences that carry weight.
inline Cyclotomic transition_probability(const TransportBunch& bunch, const CycVector& prev,
                                         const CycVector& next) {
    if (prev.size() != bunch.elements.degree || next.size() != bunch.elements.degree)
        throw std::invalid_argument("transition_probability: state dimension mismatch");
    if (inner(prev, prev).is_zero() || inner(next, next).is_zero())
        throw std::domain_error("transition_probability: zero state");
    Cyclotomic total(0);
    for (const auto& [index, weight] : bunch.weights) {
        if (weight == 0) continue;
        const auto gamma = sequence_at(bunch.elements.size(), bunch.delta_t, index);
        const CycVector transported = sequence_value(gamma, bunch.elements) * prev;
        if (inner(transported, transported).is_zero()) continue;  // orthogonal outcome, no overlap
        total += Cyclotomic(weight) * born(next, transported);
    }
    return total;
}

/// Exact product of the one-step transition probabilities along the chain.
inline Cyclotomic trajectory_probability(const ObservationSequence& obs,
                                         const std::vector<TransportBunch>& bunches) {
    if (bunches.size() + 1 != obs.states.size())
        throw std::invalid_argument("trajectory_probability: need one bunch per interval");
    Cyclotomic product(1);
    for (std::size_t i = 0; i < bunches.size(); ++i) {
        if (bunches[i].delta_t != obs.times[i + 1] - obs.times[i])
            throw std::invalid_argument("trajectory_probability: bunch length does not match interval");
        product *= transition_probability(bunches[i], obs.states[i], obs.states[i + 1]);
    }
    return product;
}

struct LogValue {
    bool minus_infinity = false;
    double value = 0.0;
};

/// Sum of the logs of the one-step probabilities; -infinity flag as soon as
/// one step has exactly zero probability.
inline LogValue trajectory_entropy(const ObservationSequence& obs,
                                   const std::vector<TransportBunch>& bunches) {
    if (bunches.size() + 1 != obs.states.size())
        throw std::invalid_argument("trajectory_entropy: need one bunch per interval");
    double sum = 0.0;
    for (std::size_t i = 0; i < bunches.size(); ++i) {
        if (bunches[i].delta_t != obs.times[i + 1] - obs.times[i])
            throw std::invalid_argument("trajectory_entropy: bunch length does not match interval");
        const Cyclotomic p = transition_probability(bunches[i], obs.states[i], obs.states[i + 1]);
        if (p.is_zero()) return {true, 0.0};
        sum += std::log(to_complex(p).real());
    }
    return {false, sum};
}

/// Alphabet of all eight splitter powers, labels "S^0".."S^7".
inline GeneratedRep c8_elements() {
    const CycMatrix s = mz_splitter(8);
    GeneratedRep rep{2, 8, {}};
    for (int j = 0; j < 8; ++j)
        rep.generators.emplace_back("S^" + std::to_string(j), matrix_power(s, static_cast<unsigned long>(j)));
    return rep;
}

/// Two-letter alphabet {identity, mirror}.
inline GeneratedRep mirror_pair() {
    const CycMatrix s = mz_splitter(8);
    GeneratedRep rep{2, 8, {}};
    rep.generators.emplace_back("I", cyc_identity(2));
    rep.generators.emplace_back("M", CycMatrix(s * s));
    return rep;
}

}  // namespace cyq
