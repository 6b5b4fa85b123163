#pragma once

#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "realhiggs/mellit.hpp"

namespace realhiggs {

/// Persistent home for computed A_{g,r}; the CLI plugs in the on-disk cache.
class APolyBackend {
public:
    virtual ~APolyBackend() = default;
    virtual std::optional<APoly> load(int g, int r) = 0;
    virtual void save(const APoly& a) = 0;
};

/// Thread-safe memo of A_{g,r}. Concurrent requests for the same key wait on
/// a single computation.
class APolyStore {
public:
    explicit APolyStore(int jobs = 1, APolyBackend* backend = nullptr) : jobs_(jobs), backend_(backend) {}

    APoly get(int g, int r);
    /// Number of values obtained from the backend rather than computed.
    int backend_hits() const;

private:
    int jobs_;
    APolyBackend* backend_;
    mutable std::mutex mutex_;
    std::map<std::pair<int, int>, std::shared_future<APoly>> slots_;
    int hits_ = 0;
};

}  // namespace realhiggs
