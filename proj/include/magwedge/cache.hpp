#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magwedge/fiber.hpp"

namespace magwedge {

// Persistent store of threshold solves, keyed by (model kind, beta rounded to
// 1e-12, solver h, solver L). Backed by a single versioned JSON file; a
// version mismatch or unreadable file simply invalidates the cache.
class ThresholdCache {
public:
    static constexpr int kVersion = 1;

    struct Entry {
        FiberKind kind;
        double beta;  // key-normalized (rounded to 1e-12)
        double h;
        double L;
        double theta;
        double argmin_p;
    };

    explicit ThresholdCache(std::string path);

    static double key_beta(double beta);

    std::optional<Entry> lookup(FiberKind kind, double beta, double h, double L) const;
    void store(const Entry& e);

    /// Cached threshold, computing and inserting on a miss. Does not write the
    /// file; call save() once after a scan completes.
    ThresholdResult get(const FiberModel& model, const FiberConfig& cfg);

    bool save() const;  // false when the file cannot be written
    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

private:
    void load();

    std::string path_;
    std::vector<Entry> entries_;
};

}  // namespace magwedge
