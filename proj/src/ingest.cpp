#include "cet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cet/csv.hpp"
#include "cet/error.hpp"
#include "cet/featurize.hpp"

namespace cet {

namespace {

const std::array<std::string_view, kSignalCount> kSignalTokens = {
    "spo2", "sbp", "map", "hr", "rr", "creatinine", "lactate", "ph", "gcs", "sedation",
};

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string row_tag(size_t row) { return "row " + std::to_string(row); }

}  // namespace

std::optional<SignalKind> parse_signal(std::string_view token) {
    std::string lower = to_lower(token);
    for (int i = 0; i < kSignalCount; ++i) {
        if (lower == kSignalTokens[i]) return static_cast<SignalKind>(i);
    }
    return std::nullopt;
}

std::string_view signal_token(SignalKind kind) { return kSignalTokens[static_cast<int>(kind)]; }

std::vector<StayRecord> parse_stays(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next_row(fields)) throw data_error("MissingColumn", "empty stays table");
    auto cols = require_columns(fields, {"stay_id", "subject_id", "hadm_id", "intime", "anchor_age",
                                         "anchor_year", "gender"});

    std::vector<StayRecord> stays;
    std::unordered_set<std::string> seen_ids;
    while (reader.next_row(fields)) {
        size_t row = reader.row_number();
        if (fields.size() < cols.size()) throw data_error("BadValue", row_tag(row) + ": too few fields");
        StayRecord s;
        s.stay_id = fields[cols[0]];
        s.subject_id = fields[cols[1]];
        s.hadm_id = fields[cols[2]];
        if (s.stay_id.empty()) throw data_error("BadValue", row_tag(row) + ": empty stay_id");
        if (!try_parse_timestamp(fields[cols[3]], s.intime)) {
            throw data_error("BadTimestamp", row_tag(row) + ": bad intime '" + fields[cols[3]] + "'");
        }
        long long age, year;
        if (!parse_int64(fields[cols[4]], age) || age < 0) {
            throw data_error("BadValue", row_tag(row) + ": bad anchor_age '" + fields[cols[4]] + "'");
        }
        if (!parse_int64(fields[cols[5]], year) || year < 1900 || year > 2300) {
            throw data_error("BadValue", row_tag(row) + ": bad anchor_year '" + fields[cols[5]] + "'");
        }
        s.anchor_age = static_cast<int>(age);
        s.anchor_year = static_cast<int>(year);
        const std::string& g = fields[cols[6]];
        if (g == "F" || g == "f") {
            s.gender = Gender::F;
        } else if (g == "M" || g == "m") {
            s.gender = Gender::M;
        } else {
            throw data_error("BadEnum", row_tag(row) + ": bad gender '" + g + "'");
        }
        if (!seen_ids.insert(s.stay_id).second) {
            throw data_error("DuplicateStayId", row_tag(row) + ": stay_id '" + s.stay_id + "' repeats");
        }
        stays.push_back(std::move(s));
    }
    return stays;
}

void parse_events(std::istream& in, const std::function<void(EventRecord&&)>& sink) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next_row(fields)) throw data_error("MissingColumn", "empty events table");
    auto cols = require_columns(fields, {"stay_id", "charttime", "signal", "value"});

    while (reader.next_row(fields)) {
        size_t row = reader.row_number();
        if (fields.size() < cols.size()) throw data_error("BadValue", row_tag(row) + ": too few fields");
        EventRecord e;
        e.stay_id = fields[cols[0]];
        if (e.stay_id.empty()) throw data_error("BadValue", row_tag(row) + ": empty stay_id");
        if (!try_parse_timestamp(fields[cols[1]], e.charttime)) {
            throw data_error("BadTimestamp", row_tag(row) + ": bad charttime '" + fields[cols[1]] + "'");
        }
        auto kind = parse_signal(fields[cols[2]]);
        if (!kind) {
            throw data_error("BadSignalToken", row_tag(row) + ": unknown signal '" + fields[cols[2]] + "'");
        }
        e.signal = *kind;
        if (!parse_double(fields[cols[3]], e.value) || !std::isfinite(e.value)) {
            throw data_error("BadValue", row_tag(row) + ": bad value '" + fields[cols[3]] + "'");
        }
        if (e.signal == SignalKind::Sedation && e.value != 1.0) {
            throw data_error("BadValue", row_tag(row) + ": sedation events carry value 1");
        }
        sink(std::move(e));
    }
}

std::vector<EventRecord> parse_events(std::istream& in) {
    std::vector<EventRecord> events;
    parse_events(in, [&](EventRecord&& e) { events.push_back(std::move(e)); });
    return events;
}

void ExclusionSummary::print(std::ostream& os) const {
    os << "exclusions: underage=" << underage << " no_vitals=" << no_vitals
       << " no_labs=" << no_labs << " not_first_stay=" << not_first_stay
       << " orphan_events=" << orphan_events << "\n";
}

Cohort select_cohort(std::vector<StayRecord> stays, std::vector<EventRecord> events,
                     ExclusionSummary* summary) {
    ExclusionSummary local;
    ExclusionSummary& sum = summary ? *summary : local;
    sum = ExclusionSummary{};

    std::unordered_map<std::string, size_t> index_of;
    index_of.reserve(stays.size() * 2);
    for (size_t i = 0; i < stays.size(); ++i) index_of[stays[i].stay_id] = i;

    // Earliest intime per hadm_id, ties by lexicographic stay_id.
    std::unordered_map<std::string, size_t> first_of_hadm;
    for (size_t i = 0; i < stays.size(); ++i) {
        auto [it, inserted] = first_of_hadm.try_emplace(stays[i].hadm_id, i);
        if (!inserted) {
            const StayRecord& cur = stays[it->second];
            const StayRecord& cand = stays[i];
            if (cand.intime < cur.intime ||
                (cand.intime == cur.intime && cand.stay_id < cur.stay_id)) {
                it->second = i;
            }
        }
    }

    std::vector<uint8_t> has_vital(stays.size(), 0), has_lab(stays.size(), 0);
    std::vector<std::vector<EventRecord>> buckets(stays.size());
    for (auto& e : events) {
        auto it = index_of.find(e.stay_id);
        if (it == index_of.end()) {
            ++sum.orphan_events;
            continue;
        }
        size_t i = it->second;
        if (is_vital(e.signal)) has_vital[i] = 1;
        if (is_lab(e.signal)) has_lab[i] = 1;
        buckets[i].push_back(std::move(e));
    }
    events.clear();
    events.shrink_to_fit();

    std::vector<size_t> keep;
    for (size_t i = 0; i < stays.size(); ++i) {
        const StayRecord& s = stays[i];
        Timestamp proxy = birth_proxy(s.anchor_age, s.anchor_year);
        if (s.intime < proxy || fractional_age(s.anchor_age, s.anchor_year, s.intime) < 18.0) {
            ++sum.underage;
            continue;
        }
        if (!has_vital[i]) {
            ++sum.no_vitals;
            continue;
        }
        if (!has_lab[i]) {
            ++sum.no_labs;
            continue;
        }
        if (first_of_hadm[s.hadm_id] != i) {
            ++sum.not_first_stay;
            continue;
        }
        keep.push_back(i);
    }

    std::sort(keep.begin(), keep.end(),
              [&](size_t a, size_t b) { return stays[a].stay_id < stays[b].stay_id; });

    Cohort cohort;
    cohort.stays.reserve(keep.size());
    cohort.events.reserve(keep.size());
    for (size_t i : keep) {
        cohort.stays.push_back(std::move(stays[i]));
        auto& evs = buckets[i];
        std::stable_sort(evs.begin(), evs.end(),
                         [](const EventRecord& a, const EventRecord& b) { return a.charttime < b.charttime; });
        cohort.events.push_back(std::move(evs));
    }
    return cohort;
}

void write_stays_csv(std::ostream& os, const std::vector<StayRecord>& stays) {
    os << "stay_id,subject_id,hadm_id,intime,anchor_age,anchor_year,gender\n";
    for (const auto& s : stays) {
        os << s.stay_id << ',' << s.subject_id << ',' << s.hadm_id << ','
           << format_timestamp(s.intime) << ',' << s.anchor_age << ',' << s.anchor_year << ','
           << (s.gender == Gender::F ? 'F' : 'M') << '\n';
    }
}

void write_events_csv(std::ostream& os, const Cohort& cohort) {
    os << "stay_id,charttime,signal,value\n";
    for (const auto& stay_events : cohort.events) {
        for (const auto& e : stay_events) {
            os << e.stay_id << ',' << format_timestamp(e.charttime) << ','
               << signal_token(e.signal) << ',' << format_double(e.value) << '\n';
        }
    }
}

}  // namespace cet
