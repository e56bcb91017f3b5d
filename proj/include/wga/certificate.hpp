#pragma once

#include <string>
#include <vector>

namespace wga {

// A conclusion together with the checklist of hypotheses that justify it.
// Conclusions are only emitted when every hypothesis passes; otherwise the
// certificate is a refusal naming the first failing hypothesis. Undeclared
// topological facts refuse rather than fail.

enum class HypothesisStatus { Pass, Fail, Undeclared };

struct Hypothesis {
    std::string name;
    HypothesisStatus status = HypothesisStatus::Pass;
    std::string provenance;  // "computed" or "declared"
    std::string detail;      // witness or value summary

    static Hypothesis pass(std::string name, std::string provenance = "computed",
                           std::string detail = "") {
        return {std::move(name), HypothesisStatus::Pass, std::move(provenance),
                std::move(detail)};
    }
    static Hypothesis fail(std::string name, std::string detail = "",
                           std::string provenance = "computed") {
        return {std::move(name), HypothesisStatus::Fail, std::move(provenance),
                std::move(detail)};
    }
    static Hypothesis undeclared(std::string name, std::string detail = "") {
        return {std::move(name), HypothesisStatus::Undeclared, "declared",
                std::move(detail)};
    }
};

struct Certificate {
    std::string statement;   // what is being certified
    std::string conclusion;  // nonempty only when all hypotheses pass
    std::vector<Hypothesis> hypotheses;
    std::string refusal;  // nonempty when refused; names the failing hypothesis

    bool passed() const { return refusal.empty() && !conclusion.empty(); }

    // Record a hypothesis; on the first non-pass, mark the certificate refused.
    void require(Hypothesis h) {
        if (refusal.empty() && h.status != HypothesisStatus::Pass) {
            refusal = h.name;
            if (!h.detail.empty()) refusal += ": " + h.detail;
            if (h.status == HypothesisStatus::Undeclared) refusal += " (undeclared)";
            conclusion.clear();
        }
        hypotheses.push_back(std::move(h));
    }

    void conclude(std::string c) {
        if (refusal.empty()) conclusion = std::move(c);
    }
};

}  // namespace wga
