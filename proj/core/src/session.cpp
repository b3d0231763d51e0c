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

#include "pausegraph/session.hpp"

#include <cstdio>

#include "pausegraph/error.hpp"

namespace pausegraph {

std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::kCreated:
      return "created";
    case SessionStatus::kPaused:
      return "paused";
    case SessionStatus::kRunning:
      return "running";
    case SessionStatus::kDone:
      return "done";
    case SessionStatus::kStopped:
      return "stopped";
  }
  return "?";
}

Session::Session(std::string id, std::shared_ptr<Dataset> dataset, DriverQuerySpec spec,
                 BreakpointSet breakpoints)
    : id_(std::move(id)),
      dataset_(std::move(dataset)),
      spec_(std::move(spec)),
      breakpoints_(std::move(breakpoints)),
      version_at_creation_(dataset_->version()) {
  auto lock = dataset_->read_lock();
  execution_ = std::make_unique<DriverExecution>(*dataset_, spec_, breakpoints_);
}

PauseEvent Session::resume() {
  DriverExecution* exec = nullptr;
  SessionStatus before;
  {
    std::lock_guard lock(mutex_);
    switch (status_) {
      case SessionStatus::kRunning:
        throw Error(ErrorCode::kSessionBusy, "session " + id_ + " is already running");
      case SessionStatus::kDone:
      case SessionStatus::kStopped:
        throw Error(ErrorCode::kSessionTerminal,
                    "session " + id_ + " is " + std::string(to_string(status_)));
      default:
        break;
    }
    before = status_;
    status_ = SessionStatus::kRunning;
    exec = execution_.get();
  }

  PauseEvent event;
  try {
    auto read = dataset_->read_lock();
    event = exec->advance();
  } catch (...) {
    std::lock_guard lock(mutex_);
    status_ = before;
    throw;
  }

  std::lock_guard lock(mutex_);
  status_ = is_match(event) ? SessionStatus::kPaused : SessionStatus::kDone;
  last_event_ = event;
  return event;
}

void Session::stop() {
  std::lock_guard lock(mutex_);
  if (status_ == SessionStatus::kRunning) {
    throw Error(ErrorCode::kSessionBusy, "session " + id_ + " is running");
  }
  if (execution_) records_after_stop_ = execution_->records_processed();
  execution_.reset();
  status_ = SessionStatus::kStopped;
}

SessionSnapshot Session::snapshot() const {
  std::lock_guard lock(mutex_);
  SessionSnapshot snap;
  snap.status = status_;
  snap.records_processed = execution_ ? execution_->records_processed() : records_after_stop_;
  snap.last_event = last_event_;
  return snap;
}

std::optional<Session::Lease> Session::try_acquire() {
  bool expected = false;
  if (!busy_.compare_exchange_strong(expected, true, std::memory_order_acq_rel)) {
    return std::nullopt;
  }
  return Lease(&busy_);
}

std::shared_ptr<Session> SessionRegistry::create(std::shared_ptr<Dataset> dataset,
                                                 DriverQuerySpec spec, BreakpointSet breakpoints) {
  std::lock_guard lock(mutex_);
  char id[32];
  std::snprintf(id, sizeof id, "s-%06llu", static_cast<unsigned long long>(next_id_));
  // Validation happens in the constructor; a rejected spec does not consume an id.
  auto session = std::make_shared<Session>(id, std::move(dataset), std::move(spec),
                                           std::move(breakpoints));
  ++next_id_;
  sessions_.emplace(session->id(), session);
  return session;
}

std::shared_ptr<Session> SessionRegistry::find(std::string_view id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession, "unknown session '" + std::string(id) + "'");
  }
  return it->second;
}

bool SessionRegistry::erase(std::string_view id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return false;
  sessions_.erase(it);
  return true;
}

std::size_t SessionRegistry::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace pausegraph
