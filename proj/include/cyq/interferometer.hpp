#pragma once

#include "cyq/groups.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cyq {

enum class Arm { Upper, Lower };

inline const char* arm_name(Arm a) { return a == Arm::Upper ? "upper" : "lower"; }

/// Partially transparent splitter alpha*I + beta*M. Construction enforces
/// |alpha|^2 + |beta|^2 = 1 and conj(alpha)*beta real; together these are
/// exactly unitarity of the element, so every detector-free circuit is a
/// unitary map.
struct Splitter {
    Cyclotomic alpha;
    Cyclotomic beta;
};

struct Mirror {};

/// Phase zeta_n^k applied to one arm.
struct PhaseShifter {
    Arm arm;
    long k;
    unsigned n;
};

/// Absorbing detector on one arm: the click branch terminates (the photon is
/// gone), the complement branch continues.
struct Detector {
    Arm arm;
};

using OpticalElement = std::variant<Splitter, Mirror, PhaseShifter, Detector>;

/// The 50/50 splitter over conductor 8.
inline CycMatrix splitter_matrix() { return mz_splitter(8); }

/// M = S^2.
inline CycMatrix mirror_matrix() {
    const CycMatrix s = splitter_matrix();
    return s * s;
}

inline std::pair<CycMatrix, CycMatrix> standard_elements() {
    return {splitter_matrix(), mirror_matrix()};
}

inline OpticalElement make_splitter(Cyclotomic alpha, Cyclotomic beta) {
    if (abs_squared(alpha) + abs_squared(beta) != Cyclotomic(1))
        throw std::domain_error("make_splitter: |alpha|^2 + |beta|^2 must be exactly 1");
    if (!is_real(conj(alpha) * beta))
        throw std::domain_error("make_splitter: conj(alpha)*beta must be real (element not unitary)");
    return Splitter{std::move(alpha), std::move(beta)};
}

inline OpticalElement make_phase_shifter(Arm arm, long k, unsigned n) {
    detail::check_conductor(n);
    return PhaseShifter{arm, k, n};
}

/// Matrix of a non-detector element.
inline CycMatrix element_matrix(const OpticalElement& element) {
    struct Visitor {
        CycMatrix operator()(const Splitter& s) const {
            return CycMatrix(cyc_identity(2) * s.alpha + mirror_matrix() * s.beta);
        }
        CycMatrix operator()(const Mirror&) const { return mirror_matrix(); }
        CycMatrix operator()(const PhaseShifter& p) const {
            CycMatrix m = cyc_identity(2);
            const Cyclotomic phase = root_of_unity(p.n, p.k);
            if (p.arm == Arm::Upper)
                m(0, 0) = phase;
            else
                m(1, 1) = phase;
            return m;
        }
        CycMatrix operator()(const Detector&) const {
            throw std::domain_error("element_matrix: a detector has no unitary matrix");
        }
    };
    return std::visit(Visitor{}, element);
}

struct Circuit {
    std::vector<OpticalElement> elements;
    unsigned conductor = 8;
};

inline bool has_detector(const Circuit& circuit) {
    for (const auto& el : circuit.elements)
        if (std::holds_alternative<Detector>(el)) return true;
    return false;
}

inline Circuit make_circuit(std::vector<OpticalElement> elements) {
    std::uint64_t lcm = 8;
    for (const auto& el : elements) {
        if (const auto* s = std::get_if<Splitter>(&el))
            lcm = lcm_u64(lcm_u64(lcm, s->alpha.conductor()), s->beta.conductor());
        else if (const auto* p = std::get_if<PhaseShifter>(&el))
            lcm = lcm_u64(lcm, p->n);
    }
    if (lcm > kMaxConductor) throw resource_error("make_circuit: conductor lcm exceeds ceiling");
    return Circuit{std::move(elements), static_cast<unsigned>(lcm)};
}

namespace detail {

inline Arm parse_arm(std::string_view text) {
    if (text == "upper") return Arm::Upper;
    if (text == "lower") return Arm::Lower;
    throw std::invalid_argument("circuit: arm must be 'upper' or 'lower'");
}

// Splits on commas at parenthesis depth zero.
inline std::vector<std::string_view> split_top_level(std::string_view text) {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth < 0) throw std::invalid_argument("circuit: unbalanced parentheses");
        if (text[i] == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw std::invalid_argument("circuit: unbalanced parentheses");
    parts.push_back(text.substr(start));
    return parts;
}

inline std::string_view strip(std::string_view t) {
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    return t;
}

}  // namespace detail

/// Circuit mini-language: comma-separated element tokens
///   S | M | P(arm,k/n) | BS(alpha,beta) | D(arm)
/// with alpha/beta in the textual scalar form; the empty string is the empty
/// circuit.
inline Circuit parse_circuit(std::string_view text) {
    std::vector<OpticalElement> elements;
    if (detail::strip(text).empty()) return make_circuit(std::move(elements));
    for (std::string_view raw : detail::split_top_level(text)) {
        const std::string_view token = detail::strip(raw);
        if (token == "S") {
            // S = (I + M)/sqrt(2): alpha = beta = sqrt(2)/2 = (z - z^3)/2.
            const Cyclotomic z = root_of_unity(8, 1), z3 = root_of_unity(8, 3);
            const Cyclotomic rsqrt2 = (z - z3) * Cyclotomic(Rational(1) / 2);
            elements.push_back(Splitter{rsqrt2, rsqrt2});
        } else if (token == "M") {
            elements.push_back(Mirror{});
        } else if (token.starts_with("P(") && token.ends_with(")")) {
            const auto args = detail::split_top_level(token.substr(2, token.size() - 3));
            if (args.size() != 2) throw std::invalid_argument("circuit: P takes (arm,k/n)");
            const Arm arm = detail::parse_arm(detail::strip(args[0]));
            const std::string_view phase = detail::strip(args[1]);
            const auto slash = phase.find('/');
            if (slash == std::string_view::npos) throw std::invalid_argument("circuit: phase must be k/n");
            long k = 0;
            unsigned long n = 0;
            try {
                k = std::stol(std::string(phase.substr(0, slash)));
                n = std::stoul(std::string(phase.substr(slash + 1)));
            } catch (const std::exception&) {
                throw std::invalid_argument("circuit: malformed phase '" + std::string(phase) + "'");
            }
            if (n == 0 || n > kMaxConductor) throw std::invalid_argument("circuit: phase conductor out of range");
            elements.push_back(PhaseShifter{arm, k, static_cast<unsigned>(n)});
        } else if (token.starts_with("BS(") && token.ends_with(")")) {
            const auto args = detail::split_top_level(token.substr(3, token.size() - 4));
            if (args.size() != 2) throw std::invalid_argument("circuit: BS takes (alpha,beta)");
            elements.push_back(make_splitter(parse_cyclotomic(detail::strip(args[0])),
                                             parse_cyclotomic(detail::strip(args[1]))));
        } else if (token.starts_with("D(") && token.ends_with(")")) {
            elements.push_back(Detector{detail::parse_arm(detail::strip(token.substr(2, token.size() - 3)))});
        } else {
            throw std::invalid_argument("circuit: unknown element '" + std::string(token) + "'");
        }
    }
    return make_circuit(std::move(elements));
}

inline CycVector basis_up() {
    CycVector v(2);
    v << Cyclotomic(1), Cyclotomic(0);
    return v;
}

inline CycVector basis_down() {
    CycVector v(2);
    v << Cyclotomic(0), Cyclotomic(1);
    return v;
}

/// Applies the elements in order; rejects circuits containing detectors.
inline CycVector run_unitary(const Circuit& circuit, CycVector state) {
    if (has_detector(circuit))
        throw std::domain_error("run_unitary: circuit contains a detector; use enumerate_branches");
    for (const auto& el : circuit.elements) state = element_matrix(el) * state;
    return state;
}

/// One measurement outcome: the detector event sequence, the exact
/// (unnormalized) amplitude vector, and the exact probability. Probabilities
/// of all branches sum to 1; they are rational in all the standard scenarios
/// but can be irrational real values for general splitters, so the exact
/// value is kept and the rational view is a checked conversion.
struct Branch {
    std::vector<std::string> events;
    CycVector amplitude;
    Cyclotomic probability;

    Rational probability_rational() const { return as_rational(probability); }

    std::string label() const {
        std::string out;
        for (const auto& e : events) {
            if (!out.empty()) out += "|";
            out += e;
        }
        return out;
    }
};

/// Walks the circuit splitting at each detector into the absorbed (click)
/// branch and the continuing complement, then resolves the final state into
/// the up/down outcomes. Branches with exactly zero probability are dropped.
/// Leaf probability is ||leaf||^2 / ||input||^2 (the projection factors
/// telescope).
inline std::vector<Branch> enumerate_branches(const Circuit& circuit, const CycVector& input) {
    if (input.size() != 2) throw std::invalid_argument("enumerate_branches: two-arm circuits only");
    const Cyclotomic input_norm2 = inner(input, input);
    if (input_norm2.is_zero()) throw std::domain_error("enumerate_branches: zero input state");
    const Cyclotomic weight = invert(input_norm2);

    std::vector<Branch> branches;
    auto emit = [&](std::vector<std::string> events, CycVector amplitude) {
        const Cyclotomic norm2 = inner(amplitude, amplitude);
        if (norm2.is_zero()) return;
        branches.push_back(Branch{std::move(events), std::move(amplitude), norm2 * weight});
    };

    CycVector state = input;
    std::vector<std::string> events;
    for (std::size_t i = 0; i < circuit.elements.size(); ++i) {
        const auto& el = circuit.elements[i];
        if (const auto* d = std::get_if<Detector>(&el)) {
            const Index hit = d->arm == Arm::Upper ? 0 : 1;
            CycVector click = CycVector::Zero(2);
            click(hit) = state(hit);
            CycVector pass = state;
            pass(hit) = Cyclotomic(0);
            std::vector<std::string> click_events = events;
            const std::string tag = "D(" + std::string(arm_name(d->arm)) + ")[" + std::to_string(i) + "]";
            click_events.push_back(tag + ":click");
            emit(std::move(click_events), std::move(click));
            if (inner(pass, pass).is_zero()) return branches;  // nothing continues
            events.push_back(tag + ":pass");
            state = std::move(pass);
        } else {
            state = element_matrix(el) * state;
        }
    }
    for (Arm arm : {Arm::Upper, Arm::Lower}) {
        const Index hit = arm == Arm::Upper ? 0 : 1;
        CycVector outcome = CycVector::Zero(2);
        outcome(hit) = state(hit);
        std::vector<std::string> final_events = events;
        final_events.push_back(std::string("out:") + arm_name(arm));
        emit(std::move(final_events), std::move(outcome));
    }
    return branches;
}

struct BombOutcome {
    std::string label;
    Rational probability;
    CycVector amplitude;
};

/// The four bomb-tester outcomes. A defective bomb reflects like the plain
/// mirror (the circuit stays unitary); a live bomb is an absorbing detector
/// on the lower arm between the splitters.
inline std::vector<BombOutcome> bomb_test() {
    std::vector<BombOutcome> rows;

    const Circuit defective = parse_circuit("S,M,S");
    for (const Branch& b : enumerate_branches(defective, basis_up()))
        rows.push_back({"defective", b.probability_rational(), b.amplitude});

    const Circuit live = parse_circuit("S,D(lower),M,S");
    for (const Branch& b : enumerate_branches(live, basis_up())) {
        std::string label;
        if (b.events.front() == "D(lower)[1]:click")
            label = "exploded";
        else if (b.events.back() == "out:upper")
            label = "untested";
        else
            label = "good-intact";
        rows.push_back({label, b.probability_rational(), b.amplitude});
    }
    return rows;
}

}  // namespace cyq
