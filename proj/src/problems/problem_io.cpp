#include "gave/problems/problem_io.hpp"

#include "gave/error.hpp"
#include "gave/matrixlab/matrix_market.hpp"

namespace gave {

StoredProblem read_problem_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::IoError, dir.string() + " is not a directory");
    StoredProblem out;
    out.problem.A = read_matrix_market(dir / "A.mtx");
    out.problem.B = read_matrix_market(dir / "B.mtx");
    out.problem.b = read_vector(dir / "b.txt");
    out.problem.validate();
    if (std::filesystem::exists(dir / "xstar.txt")) {
        out.x_star = read_vector(dir / "xstar.txt");
        if (out.x_star->size() != out.problem.size()) {
            throw Error(ErrorCode::DimensionMismatch, "xstar.txt length does not match b.txt");
        }
    }
    return out;
}

void write_problem_dir(const std::filesystem::path& dir, const GaveProblem& p, const std::optional<Vector>& x_star) {
    p.validate();
    std::filesystem::create_directories(dir);
    write_matrix_market(dir / "A.mtx", p.A);
    write_matrix_market(dir / "B.mtx", p.B);
    write_vector(dir / "b.txt", p.b);
    if (x_star) write_vector(dir / "xstar.txt", *x_star);
}

}  // namespace gave
