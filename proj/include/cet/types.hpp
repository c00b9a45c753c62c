#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cet/time.hpp"

namespace cet {

enum class SignalKind : uint8_t {
    SpO2 = 0,
    Sbp,
    Map,
    Hr,
    Rr,
    Creatinine,
    Lactate,
    Ph,
    Gcs,
    Sedation,
};

constexpr int kSignalCount = 10;

// CSV token set; parse is case-insensitive.
std::optional<SignalKind> parse_signal(std::string_view token);
std::string_view signal_token(SignalKind kind);

inline bool is_vital(SignalKind k) {
    return k == SignalKind::SpO2 || k == SignalKind::Sbp || k == SignalKind::Map ||
           k == SignalKind::Hr || k == SignalKind::Rr;
}

inline bool is_lab(SignalKind k) {
    return k == SignalKind::Creatinine || k == SignalKind::Lactate || k == SignalKind::Ph;
}

enum class Gender : uint8_t { F, M };

struct StayRecord {
    std::string stay_id;
    std::string subject_id;
    std::string hadm_id;
    Timestamp intime = 0;
    int anchor_age = 0;
    int anchor_year = 0;
    Gender gender = Gender::F;
};

struct EventRecord {
    std::string stay_id;
    Timestamp charttime = 0;
    SignalKind signal = SignalKind::SpO2;
    double value = 0.0;
};

// Stays ordered by stay_id; events[i] belongs to stays[i], sorted ascending
// by charttime (stable w.r.t. file order on ties).
struct Cohort {
    std::vector<StayRecord> stays;
    std::vector<std::vector<EventRecord>> events;
};

struct CetLabels {
    bool respiratory = false;
    bool hemodynamic = false;
    bool renal = false;
    bool neurologic = false;

    bool operator==(const CetLabels&) const = default;
};

constexpr std::array<std::string_view, 4> kLabelNames = {
    "respiratory",
    "hemodynamic",
    "renal",
    "neurologic",
};

inline bool label_bit(const CetLabels& y, int i) {
    switch (i) {
        case 0: return y.respiratory;
        case 1: return y.hemodynamic;
        case 2: return y.renal;
        default: return y.neurologic;
    }
}

}  // namespace cet
