#pragma once

#include <functional>
#include <istream>
#include <ostream>
#include <vector>

#include "cet/types.hpp"

namespace cet {

// Expected header: stay_id,subject_id,hadm_id,intime,anchor_age,anchor_year,gender
// (column order free). Errors: MissingColumn, BadTimestamp, BadEnum,
// BadValue, DuplicateStayId, each naming the offending row.
std::vector<StayRecord> parse_stays(std::istream& in);

// Expected header: stay_id,charttime,signal,value. Single streaming pass;
// the sink is invoked per record in file order. Errors: BadSignalToken,
// BadValue, BadTimestamp.
void parse_events(std::istream& in, const std::function<void(EventRecord&&)>& sink);
std::vector<EventRecord> parse_events(std::istream& in);

// Exclusion tallies, one bucket per reason. A stay failing several
// predicates is counted once, under the first failing reason in the order
// below.
struct ExclusionSummary {
    size_t underage = 0;        // fractional age < 18 (or intime before the birth proxy)
    size_t no_vitals = 0;       // no SpO2/SBP/MAP/HR/RR event anywhere in the stay
    size_t no_labs = 0;         // no creatinine/lactate/pH event anywhere in the stay
    size_t not_first_stay = 0;  // later stay on the same hadm_id
    size_t orphan_events = 0;   // events whose stay_id matches no stay

    size_t excluded_stays() const { return underage + no_vitals + no_labs + not_first_stay; }
    void print(std::ostream& os) const;
};

// Cohort rules: fractional age >= 18 (inclusive), at least one vital and one
// lab event at any charttime, earliest intime per hadm_id (ties broken by
// lexicographic stay_id). Events of excluded stays are dropped; retained
// stays are ordered by stay_id and their events sorted by charttime.
Cohort select_cohort(std::vector<StayRecord> stays, std::vector<EventRecord> events,
                     ExclusionSummary* summary = nullptr);

void write_stays_csv(std::ostream& os, const std::vector<StayRecord>& stays);
void write_events_csv(std::ostream& os, const Cohort& cohort);

}  // namespace cet
