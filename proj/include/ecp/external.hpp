#pragma once

// Objectives evaluated by a persistent child process over a line protocol.
//
// Request:  one line, d space-separated decimal floats in shortest round-trip
//           form (std::to_chars), terminated by '\n'.
// Response: one line holding a single finite decimal float.
//
// Strictly one request, one response. The child is started with /bin/sh -c and
// lives until the Objective (and every copy of it) is destroyed.

#include <cerrno>
#include <charconv>
#include <chrono>
#include <csignal>
#include <cstring>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "ecp/core.hpp"
#include "ecp/objectives.hpp"

namespace ecp {

struct ProtocolError : Error {
  using Error::Error;
};

struct ProcessExited : Error {
  using Error::Error;
};

struct Timeout : Error {
  using Error::Error;
};

inline constexpr std::chrono::milliseconds kDefaultExternalTimeout{300'000};

//! Shortest round-trip decimal rendering of a point, newline terminated.
inline std::string format_request(std::span<const double> x) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i)
      out.push_back(' ');
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x[i]);
    out.append(buf, end);
  }
  out.push_back('\n');
  return out;
}

//! Parse a response line (without the newline). Throws ProtocolError.
inline double parse_response(std::string_view line) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!line.empty() && is_space(line.front()))
    line.remove_prefix(1);
  while (!line.empty() && is_space(line.back()))
    line.remove_suffix(1);
  if (!line.empty() && line.front() == '+')
    line.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
  if (line.empty() || ec != std::errc() || ptr != line.data() + line.size())
    throw ProtocolError("external objective: malformed response '" + std::string(line) + "'");
  if (!std::isfinite(v))
    throw ProtocolError("external objective: non-finite response '" + std::string(line) + "'");
  return v;
}

//! Child process speaking the line protocol. Calls are serialized.
class ExternalProcess {
public:
  ExternalProcess(std::string command, std::chrono::milliseconds timeout)
      : command_(std::move(command)), timeout_(timeout) {
    int in_pipe[2];
    int out_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0)
      throw Error("external objective: pipe failed: " + std::string(std::strerror(errno)));
    if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
      ::close(in_pipe[0]);
      ::close(in_pipe[1]);
      throw Error("external objective: pipe failed: " + std::string(std::strerror(errno)));
    }
    pid_ = ::fork();
    if (pid_ < 0) {
      for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]})
        ::close(fd);
      throw Error("external objective: fork failed: " + std::string(std::strerror(errno)));
    }
    if (pid_ == 0) {
      ::dup2(in_pipe[0], STDIN_FILENO);
      ::dup2(out_pipe[1], STDOUT_FILENO);
      ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
  }

  ExternalProcess(const ExternalProcess&) = delete;
  ExternalProcess& operator=(const ExternalProcess&) = delete;

  ~ExternalProcess() { shutdown(); }

  const std::string& command() const { return command_; }

  double call(std::span<const double> x) {
    std::lock_guard lock(mutex_);
    if (broken_)
      throw ProcessExited("external objective '" + command_ + "' is no longer usable");
    write_all(format_request(x));
    return parse_response(read_line());
  }

private:
  void fail_exited(const std::string& why) {
    broken_ = true;
    reap(std::chrono::milliseconds(200));
    throw ProcessExited("external objective '" + command_ + "' exited: " + why);
  }

  void write_all(const std::string& data) {
    // Block SIGPIPE for this thread and swallow any pending one, so a dead
    // child surfaces as EPIPE instead of killing the process.
    sigset_t pipe_set, old_set;
    sigemptyset(&pipe_set);
    sigaddset(&pipe_set, SIGPIPE);
    pthread_sigmask(SIG_BLOCK, &pipe_set, &old_set);
    std::size_t off = 0;
    int err = 0;
    while (off < data.size()) {
      const ssize_t w = ::write(to_child_, data.data() + off, data.size() - off);
      if (w < 0) {
        if (errno == EINTR)
          continue;
        err = errno;
        break;
      }
      off += static_cast<std::size_t>(w);
    }
    if (err == EPIPE) {
      const timespec zero{0, 0};
      while (sigtimedwait(&pipe_set, nullptr, &zero) > 0) {
      }
    }
    pthread_sigmask(SIG_SETMASK, &old_set, nullptr);
    if (err == EPIPE)
      fail_exited("broken pipe");
    if (err != 0)
      throw Error("external objective: write failed: " + std::string(std::strerror(err)));
  }

  std::string read_line() {
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + timeout_;
    for (;;) {
      if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
        std::string line = buffer_.substr(0, pos);
        buffer_.erase(0, pos + 1);
        return line;
      }
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now());
      if (left.count() <= 0) {
        broken_ = true;
        kill_child();
        throw Timeout("external objective '" + command_ + "' did not answer within " +
                      std::to_string(timeout_.count()) + " ms");
      }
      pollfd pfd{from_child_, POLLIN, 0};
      const int r = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
      if (r < 0) {
        if (errno == EINTR)
          continue;
        throw Error("external objective: poll failed: " + std::string(std::strerror(errno)));
      }
      if (r == 0)
        continue;
      char buf[4096];
      const ssize_t got = ::read(from_child_, buf, sizeof(buf));
      if (got < 0) {
        if (errno == EINTR)
          continue;
        throw Error("external objective: read failed: " + std::string(std::strerror(errno)));
      }
      if (got == 0)
        fail_exited("end of output");
      buffer_.append(buf, static_cast<std::size_t>(got));
    }
  }

  void kill_child() {
    if (pid_ > 0) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, nullptr, 0);
      pid_ = -1;
    }
  }

  // Wait up to `grace` for the child to exit on its own, then kill it.
  void reap(std::chrono::milliseconds grace) {
    if (pid_ <= 0)
      return;
    const auto until = std::chrono::steady_clock::now() + grace;
    while (std::chrono::steady_clock::now() < until) {
      if (::waitpid(pid_, nullptr, WNOHANG) == pid_) {
        pid_ = -1;
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    kill_child();
  }

  void shutdown() {
    if (to_child_ >= 0) {
      ::close(to_child_);
      to_child_ = -1;
    }
    reap(std::chrono::milliseconds(1000));
    if (from_child_ >= 0) {
      ::close(from_child_);
      from_child_ = -1;
    }
  }

  std::string command_;
  std::chrono::milliseconds timeout_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool broken_ = false;
  std::mutex mutex_;
};

//! Objective backed by a child process started from `command`.
inline Objective external(const std::string& command, std::size_t dim, const BoxDomain& domain,
                          std::chrono::milliseconds timeout = kDefaultExternalTimeout,
                          std::string name = {}) {
  detail::require(dim == domain.dim(), "external: dimension does not match domain");
  detail::require(!command.empty(), "external: empty command");
  auto proc = std::make_shared<ExternalProcess>(command, timeout);
  Objective obj;
  obj.name = name.empty() ? command : std::move(name);
  obj.dim = dim;
  obj.default_domain = domain;
  obj.evaluate = [proc](std::span<const double> x) { return proc->call(x); };
  return obj;
}

}  // namespace ecp
