#include "magwedge/cache.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace magwedge {

namespace {

const char* kind_name(FiberKind k) {
    return k == FiberKind::RobinHalfLine ? "robin" : "delta";
}

}  // namespace

ThresholdCache::ThresholdCache(std::string path) : path_(std::move(path)) { load(); }

double ThresholdCache::key_beta(double beta) {
    return std::round(beta * 1e12) / 1e12;
}

void ThresholdCache::load() {
    entries_.clear();
    std::ifstream in(path_);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return;  // unreadable cache: start fresh
    }
    if (!j.is_object() || j.value("format", "") != "magwedge-threshold-cache" ||
        j.value("version", -1) != kVersion)
        return;  // version mismatch invalidates
    for (const auto& e : j.value("entries", nlohmann::json::array())) {
        Entry entry{};
        const std::string kind = e.value("model", "");
        if (kind == "robin")
            entry.kind = FiberKind::RobinHalfLine;
        else if (kind == "delta")
            entry.kind = FiberKind::DeltaFullLine;
        else
            continue;
        entry.beta = e.value("beta", 0.0);
        entry.h = e.value("h", 0.0);
        entry.L = e.value("L", 0.0);
        entry.theta = e.value("theta", 0.0);
        entry.argmin_p = e.value("argmin_p", nlohmann::json()).is_number()
                             ? e["argmin_p"].get<double>()
                             : std::numeric_limits<double>::quiet_NaN();
        entries_.push_back(entry);
    }
}

std::optional<ThresholdCache::Entry> ThresholdCache::lookup(FiberKind kind, double beta,
                                                            double h, double L) const {
    const double kb = key_beta(beta);
    for (const auto& e : entries_)
        if (e.kind == kind && e.beta == kb && e.h == h && e.L == L) return e;
    return std::nullopt;
}

void ThresholdCache::store(const Entry& e) {
    Entry norm = e;
    norm.beta = key_beta(e.beta);
    for (auto& existing : entries_)
        if (existing.kind == norm.kind && existing.beta == norm.beta &&
            existing.h == norm.h && existing.L == norm.L) {
            existing = norm;
            return;
        }
    entries_.push_back(norm);
}

ThresholdResult ThresholdCache::get(const FiberModel& model, const FiberConfig& cfg) {
    if (auto hit = lookup(model.kind, model.beta, cfg.h, cfg.L)) {
        ThresholdResult r;
        r.theta = hit->theta;
        r.argmin_p = hit->argmin_p;
        r.model = model;
        r.config = cfg;
        return r;
    }
    const ThresholdResult r = threshold(model, cfg);
    store(Entry{model.kind, model.beta, cfg.h, cfg.L, r.theta, r.argmin_p});
    return r;
}

bool ThresholdCache::save() const {
    nlohmann::json j;
    j["format"] = "magwedge-threshold-cache";
    j["version"] = kVersion;
    auto arr = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json je;
        je["model"] = kind_name(e.kind);
        je["beta"] = e.beta;
        je["h"] = e.h;
        je["L"] = e.L;
        je["theta"] = e.theta;
        if (std::isnan(e.argmin_p))
            je["argmin_p"] = nullptr;
        else
            je["argmin_p"] = e.argmin_p;
        arr.push_back(je);
    }
    j["entries"] = arr;
    std::ofstream out(path_);
    if (!out) return false;
    out << j.dump(2) << "\n";
    return bool(out);
}

}  // namespace magwedge
