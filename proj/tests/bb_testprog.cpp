// Line-protocol objective server used by the black-box adapter tests.
// Reads one point per line (space-separated decimals) and answers either
// `F <value>` or `INFEASIBLE`. The mode argument selects the behavior.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace {

std::vector<double> parse_point(const std::string& line) {
    std::vector<double> x;
    const char* p = line.c_str();
    char* end = nullptr;
    while (*p) {
        const double v = std::strtod(p, &end);
        if (end == p) break;
        x.push_back(v);
        p = end;
    }
    return x;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string mode = argc > 1 ? argv[1] : "lin_wedge";
    FILE* request_log = argc > 2 ? fopen(argv[2], "a") : nullptr;
    setvbuf(stdout, nullptr, _IOLBF, 0);

    if (mode == "exit") return 0;

    std::string line;
    int ch;
    while (true) {
        line.clear();
        while ((ch = getchar()) != EOF && ch != '\n') line.push_back(static_cast<char>(ch));
        if (ch == EOF && line.empty()) break;

        if (request_log) {
            fprintf(request_log, "%s\n", line.c_str());
            fflush(request_log);
        }

        if (mode == "zero") {
            printf("F 0\n");
        } else if (mode == "garbage") {
            printf("banana\n");
        } else if (mode == "sleep") {
            std::this_thread::sleep_for(std::chrono::seconds(30));
            printf("F 0\n");
        } else {  // lin_wedge
            const std::vector<double> x = parse_point(line);
            if (x.size() != 2) {
                printf("banana\n");
                continue;
            }
            if (x[1] <= 2.0 * x[0] && x[1] >= x[0] / 2.0)
                printf("F %.17g\n", x[0] + 10.0 * x[1]);
            else
                printf("INFEASIBLE\n");
        }
    }
    return 0;
}
