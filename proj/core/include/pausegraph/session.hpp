// Copyright 2026 The pausegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "pausegraph/dataset.hpp"
#include "pausegraph/driver_query.hpp"

namespace pausegraph {

enum class SessionStatus : std::uint8_t { kCreated, kPaused, kRunning, kDone, kStopped };

std::string_view to_string(SessionStatus status);

struct SessionSnapshot {
  SessionStatus status = SessionStatus::kCreated;
  std::uint64_t records_processed = 0;
  std::optional<PauseEvent> last_event;
};

/// A driver query bound to a dataset, plus its lifecycle.
///
/// Status moves created -> paused/done, paused -> paused/done, and any ->
/// stopped; it reads `running` while a continue is executing. A second
/// continue or stop issued while one is running fails with kSessionBusy.
class Session {
 public:
  Session(std::string id, std::shared_ptr<Dataset> dataset, DriverQuerySpec spec,
          BreakpointSet breakpoints);

  const std::string& id() const noexcept { return id_; }
  Dataset& dataset() const noexcept { return *dataset_; }
  const std::shared_ptr<Dataset>& dataset_ptr() const noexcept { return dataset_; }
  const DriverQuerySpec& spec() const noexcept { return spec_; }
  const BreakpointSet& breakpoints() const noexcept { return breakpoints_; }
  std::uint64_t dataset_version_at_creation() const noexcept { return version_at_creation_; }

  /// Runs to the next pause. Throws kSessionTerminal after done/stopped.
  PauseEvent resume();
  // Idempotent on terminal sessions; releases the cursor.
  void stop();
  SessionSnapshot snapshot() const;

  /// Exclusive right to issue requests against the session. The service
  /// layer holds one per request and answers session_busy when it cannot get
  /// one.
  class Lease {
   public:
    Lease(Lease&& other) noexcept : flag_(std::exchange(other.flag_, nullptr)) {}
    Lease& operator=(Lease&&) = delete;
    ~Lease() {
      if (flag_) flag_->store(false, std::memory_order_release);
    }

   private:
    friend class Session;
    explicit Lease(std::atomic<bool>* flag) : flag_(flag) {}
    std::atomic<bool>* flag_;
  };

  std::optional<Lease> try_acquire();

 private:
  std::string id_;
  std::shared_ptr<Dataset> dataset_;
  DriverQuerySpec spec_;
  BreakpointSet breakpoints_;
  std::uint64_t version_at_creation_;

  mutable std::mutex mutex_;
  SessionStatus status_ = SessionStatus::kCreated;
  std::unique_ptr<DriverExecution> execution_;
  std::uint64_t records_after_stop_ = 0;
  std::optional<PauseEvent> last_event_;

  std::atomic<bool> busy_{false};
};

/// Live and terminal sessions by id. Ids are sequential tokens
/// ("s-000001", ...), unique for the registry's lifetime; terminal sessions
/// stay registered until erased.
class SessionRegistry {
 public:
  std::shared_ptr<Session> create(std::shared_ptr<Dataset> dataset, DriverQuerySpec spec,
                                  BreakpointSet breakpoints);
  // Throws kUnknownSession.
  std::shared_ptr<Session> find(std::string_view id) const;
  bool erase(std::string_view id);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::uint64_t next_id_ = 1;
};

}  // namespace pausegraph
