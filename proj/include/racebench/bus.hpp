#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <typeindex>
#include <utility>
#include <vector>

#include "racebench/errors.hpp"

namespace racebench {

// Synchronous in-process topic bus. One message kind per topic for the
// lifetime of the bus; delivery is immediate and in subscription order, so
// per-topic FIFO holds trivially. Single-threaded by contract.
class Bus {
 public:
  using HandlerId = std::uint64_t;

  template <typename Msg>
  HandlerId subscribe(const std::string& topic, std::function<void(const Msg&)> handler) {
    Entry& entry = bind<Msg>(topic, "subscribe");
    const HandlerId id = next_id_++;
    entry.handlers.emplace_back(id, [fn = std::move(handler)](const void* msg) {
      fn(*static_cast<const Msg*>(msg));
    });
    handler_topics_[id] = topic;
    return id;
  }

  void unsubscribe(HandlerId id) {
    auto it = handler_topics_.find(id);
    if (it == handler_topics_.end()) return;
    auto& handlers = topics_.at(it->second).handlers;
    for (auto h = handlers.begin(); h != handlers.end(); ++h) {
      if (h->first == id) {
        handlers.erase(h);
        break;
      }
    }
    handler_topics_.erase(it);
  }

  // Delivers msg to all current subscribers, in subscription order.
  // Returns the delivery count.
  template <typename Msg>
  std::size_t publish(const std::string& topic, const Msg& msg) {
    Entry& entry = bind<Msg>(topic, "publish");
    ++entry.published;
    // Snapshot ids so handlers that (un)subscribe mid-delivery are safe.
    std::vector<HandlerId> ids;
    ids.reserve(entry.handlers.size());
    for (const auto& [id, fn] : entry.handlers) ids.push_back(id);
    std::size_t delivered = 0;
    for (HandlerId id : ids) {
      for (const auto& [hid, fn] : topics_.at(topic).handlers) {
        if (hid == id) {
          fn(&msg);
          ++delivered;
          break;
        }
      }
    }
    return delivered;
  }

  bool has_topic(const std::string& topic) const { return topics_.count(topic) != 0; }

  std::uint64_t publish_count(const std::string& topic) const {
    auto it = topics_.find(topic);
    return it == topics_.end() ? 0 : it->second.published;
  }

  std::size_t subscriber_count(const std::string& topic) const {
    auto it = topics_.find(topic);
    return it == topics_.end() ? 0 : it->second.handlers.size();
  }

  template <typename Msg>
  bool topic_is(const std::string& topic) const {
    auto it = topics_.find(topic);
    return it != topics_.end() && it->second.kind == std::type_index(typeid(Msg));
  }

  std::vector<std::string> topic_names() const {
    std::vector<std::string> names;
    names.reserve(topics_.size());
    for (const auto& [name, entry] : topics_) names.push_back(name);
    return names;
  }

 private:
  struct Entry {
    std::type_index kind;
    std::vector<std::pair<HandlerId, std::function<void(const void*)>>> handlers;
    std::uint64_t published{0};
  };

  template <typename Msg>
  Entry& bind(const std::string& topic, const char* op) {
    const std::type_index kind(typeid(Msg));
    auto it = topics_.find(topic);
    if (it == topics_.end()) {
      it = topics_.emplace(topic, Entry{kind, {}, 0}).first;
    } else if (it->second.kind != kind) {
      throw KindMismatch(std::string(op) + " on '" + topic + "': topic is bound to " +
                         it->second.kind.name() + ", got " + kind.name());
    }
    return it->second;
  }

  std::map<std::string, Entry> topics_;
  std::map<HandlerId, std::string> handler_topics_;
  HandlerId next_id_{1};
};

// RAII subscription handle.
class Subscription {
 public:
  Subscription() = default;
  Subscription(Bus* bus, Bus::HandlerId id) : bus_(bus), id_(id) {}
  Subscription(Subscription&& o) noexcept : bus_(o.bus_), id_(o.id_) { o.bus_ = nullptr; }
  Subscription& operator=(Subscription&& o) noexcept {
    if (this != &o) {
      reset();
      bus_ = o.bus_;
      id_ = o.id_;
      o.bus_ = nullptr;
    }
    return *this;
  }
  Subscription(const Subscription&) = delete;
  Subscription& operator=(const Subscription&) = delete;
  ~Subscription() { reset(); }

  void reset() {
    if (bus_ != nullptr) bus_->unsubscribe(id_);
    bus_ = nullptr;
  }

 private:
  Bus* bus_{nullptr};
  Bus::HandlerId id_{0};
};

}  // namespace racebench
