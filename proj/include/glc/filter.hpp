#pragma once

#include <string>
#include <vector>

#include "glc/glc.hpp"
#include "glc/modlinalg.hpp"

namespace glc {

/// A point to test: exact rational, or a Z_p-point known modulo p^m (m >= 2).
struct Candidate {
    std::string label;
    ClassPoint point;
};

enum class Classification { Retained, Condition1, Condition2 };
const char* classification_name(Classification c);

struct FilterCertificate {
    int precision = 0;  // N; logs are compared modulo p^{N-1}
    IntRow witness;
    LogVector log;       // kernel_log([R] - [b] - T)
    ModVector residual;  // part of log outside the span of the kernel logs
    std::string note;
};

struct FilterResult {
    Candidate candidate;
    FpPoint disk;
    Classification classification = Classification::Retained;
    FilterCertificate certificate;
};

struct FilterOptions {
    int precision_cap = 2;
};

std::vector<FilterResult> filter_candidates(const GlcSetup& s, const std::vector<Candidate>& candidates,
                                            const FilterOptions& opt = {});

/// True when p does not divide |J(F_p)|.
bool saturation_shortcut_check(const HyperellipticCurve& c);

}  // namespace glc
