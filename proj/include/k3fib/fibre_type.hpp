#pragma once

/// Names for the singular fibre types of the minimal form, in the style of
/// Kodaira's notation for elliptic surfaces.

#include <stdexcept>
#include <string>

namespace k3fib {

enum class FibreKind { I0, I0star, Id, Idstar, II, III, IV, IIstar, IIIstar, IVstar };

struct FibreType {
    FibreKind kind = FibreKind::I0;
    int d = 0;              // only for Id / Idstar
    bool singular = false;  // the "(singular)" marks: isolated singularity data

    static FibreType make(FibreKind k, int d = 0, bool singular = false) {
        FibreType t{k, d, singular};
        if (k == FibreKind::Id || k == FibreKind::Idstar) {
            if (d < 1) throw std::domain_error("I_d / I_d* require d >= 1");
        } else {
            t.d = 0;
        }
        return t;
    }

    friend bool operator==(const FibreType&, const FibreType&) = default;

    std::string str() const {
        switch (kind) {
            case FibreKind::I0: return singular ? "I0 (singular)" : "I0";
            case FibreKind::I0star: return singular ? "I0* (singular)" : "I0*";
            case FibreKind::Id: return "I" + std::to_string(d);
            case FibreKind::Idstar: return "I" + std::to_string(d) + "*";
            case FibreKind::II: return "II";
            case FibreKind::III: return "III";
            case FibreKind::IV: return "IV";
            case FibreKind::IIstar: return "II*";
            case FibreKind::IIIstar: return "III*";
            case FibreKind::IVstar: return "IV*";
        }
        return "?";
    }

    /// Name usable as a file stem ("*" spelled out).
    std::string slug() const {
        switch (kind) {
            case FibreKind::I0: return "I0";
            case FibreKind::I0star: return "I0star";
            case FibreKind::Id: return "I" + std::to_string(d);
            case FibreKind::Idstar: return "I" + std::to_string(d) + "star";
            case FibreKind::II: return "II";
            case FibreKind::III: return "III";
            case FibreKind::IV: return "IV";
            case FibreKind::IIstar: return "IIstar";
            case FibreKind::IIIstar: return "IIIstar";
            case FibreKind::IVstar: return "IVstar";
        }
        return "unknown";
    }
};

}  // namespace k3fib
