#include "cdos/blackbox.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <optional>

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include "cdos/errors.hpp"

namespace cdos {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

struct Reply {
    bool feasible = false;
    double value = 0.0;
};

class BlackBoxProcess {
public:
    explicit BlackBoxProcess(const BlackBoxSpec& spec) : spec_(spec) {
        int to_child[2];
        int from_child[2];
        if (pipe(to_child) != 0 || pipe(from_child) != 0)
            throw ObjectiveEvalError("black box: pipe() failed");
        pid_ = fork();
        if (pid_ < 0) throw ObjectiveEvalError("black box: fork() failed");
        if (pid_ == 0) {
            dup2(to_child[0], STDIN_FILENO);
            dup2(from_child[1], STDOUT_FILENO);
            close(to_child[0]);
            close(to_child[1]);
            close(from_child[0]);
            close(from_child[1]);
            execl("/bin/sh", "sh", "-c", spec_.command.c_str(), (char*)nullptr);
            _exit(127);
        }
        close(to_child[0]);
        close(from_child[1]);
        in_fd_ = to_child[1];
        out_fd_ = from_child[0];
    }

    ~BlackBoxProcess() {
        if (in_fd_ >= 0) close(in_fd_);
        if (out_fd_ >= 0) close(out_fd_);
        if (pid_ > 0) {
            kill(pid_, SIGTERM);
            waitpid(pid_, nullptr, 0);
        }
    }

    BlackBoxProcess(const BlackBoxProcess&) = delete;
    BlackBoxProcess& operator=(const BlackBoxProcess&) = delete;

    // One request/reply round trip, memoized on the last point.
    const Reply& query(const Vector& x) {
        if (memo_point_ && *memo_point_ == x) return memo_reply_;

        std::string request;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) request += ' ';
            request += format_double(x[i]);
        }
        request += '\n';
        write_all(request);

        const std::string line = read_line();
        if (line == "INFEASIBLE") {
            memo_reply_ = Reply{false, 0.0};
        } else if (line.size() > 2 && line[0] == 'F' && line[1] == ' ') {
            const char* begin = line.c_str() + 2;
            char* end = nullptr;
            errno = 0;
            const double v = std::strtod(begin, &end);
            if (errno != 0 || end == begin || *end != '\0')
                throw ObjectiveEvalError("black box: unparseable value", line);
            memo_reply_ = Reply{true, v};
        } else {
            throw ObjectiveEvalError("black box: unparseable reply", line);
        }
        memo_point_ = x;
        return memo_reply_;
    }

private:
    void write_all(const std::string& data) {
        std::size_t off = 0;
        while (off < data.size()) {
            const ssize_t n = write(in_fd_, data.data() + off, data.size() - off);
            if (n < 0) {
                if (errno == EINTR) continue;
                throw ObjectiveEvalError("black box: process not accepting requests");
            }
            off += static_cast<std::size_t>(n);
        }
    }

    std::string read_line() {
        const auto deadline =
            std::chrono::steady_clock::now() + spec_.timeout;
        while (true) {
            const auto nl = buffer_.find('\n');
            if (nl != std::string::npos) {
                std::string line = buffer_.substr(0, nl);
                buffer_.erase(0, nl + 1);
                if (!line.empty() && line.back() == '\r') line.pop_back();
                return line;
            }
            const auto now = std::chrono::steady_clock::now();
            if (now >= deadline) throw ObjectiveEvalError("black box: reply timeout");
            const auto left =
                std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
            pollfd pfd{out_fd_, POLLIN, 0};
            const int pr = poll(&pfd, 1, static_cast<int>(left.count()) + 1);
            if (pr < 0) {
                if (errno == EINTR) continue;
                throw ObjectiveEvalError("black box: poll failed");
            }
            if (pr == 0) throw ObjectiveEvalError("black box: reply timeout");
            char chunk[512];
            const ssize_t n = read(out_fd_, chunk, sizeof(chunk));
            if (n < 0) {
                if (errno == EINTR) continue;
                throw ObjectiveEvalError("black box: read failed");
            }
            if (n == 0) throw ObjectiveEvalError("black box: process exited");
            buffer_.append(chunk, static_cast<std::size_t>(n));
        }
    }

    BlackBoxSpec spec_;
    pid_t pid_ = -1;
    int in_fd_ = -1;
    int out_fd_ = -1;
    std::string buffer_;
    std::optional<Vector> memo_point_;
    Reply memo_reply_;
};

}  // namespace

BlackBoxFunctions blackbox_objective(const BlackBoxSpec& spec) {
    auto process = std::make_shared<BlackBoxProcess>(spec);
    BlackBoxFunctions fns;
    fns.feasible = [process](const Vector& x) { return process->query(x).feasible; };
    fns.objective = [process](const Vector& x) {
        const Reply& r = process->query(x);
        if (!r.feasible)
            throw ObjectiveEvalError("black box: objective requested at an infeasible point",
                                     "INFEASIBLE");
        return r.value;
    };
    return fns;
}

}  // namespace cdos
