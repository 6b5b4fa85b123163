#include "realhiggs/store.hpp"

namespace realhiggs {

APoly APolyStore::get(int g, int r) {
    std::unique_lock lock(mutex_);
    if (auto it = slots_.find({g, r}); it != slots_.end()) {
        auto fut = it->second;
        lock.unlock();
        return fut.get();
    }
    std::promise<APoly> promise;
    std::shared_future<APoly> fut = promise.get_future().share();
    slots_.emplace(std::make_pair(g, r), fut);
    lock.unlock();

    try {
        std::optional<APoly> loaded = backend_ ? backend_->load(g, r) : std::nullopt;
        if (loaded) {
            std::lock_guard count(mutex_);
            ++hits_;
        }
        APoly value = loaded ? std::move(*loaded) : a_poly(g, r, jobs_);
        if (!loaded && backend_) backend_->save(value);
        promise.set_value(std::move(value));
    } catch (...) {
        promise.set_exception(std::current_exception());
    }
    return fut.get();
}

int APolyStore::backend_hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
}

}  // namespace realhiggs
