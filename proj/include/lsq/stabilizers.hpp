#pragma once

#include "lsq/brackets.hpp"
#include "lsq/freelie.hpp"
#include "lsq/qlinalg.hpp"
#include "lsq/report.hpp"
#include "lsq/theta.hpp"

namespace lsq {

// Solution spaces of the defining linear conditions, inside the Lie
// component of the given bidegree. Bases are rref-canonical over the word
// coordinates, hence deterministic.
SubspaceBasis ls_basis(int m, int n);
SubspaceBasis lq_basis(int m, int n);

// Membership tests that re-evaluate the defining conditions directly
// (independent of the basis computations above).
bool ls_member(const NCPoly& p);
bool lq_member(const NCPoly& p);

// Defect of s^Y_psi as a coderivation, evaluated at u:
//   Delta_Y(s^Y_psi(u)) - (s^Y_psi (x) id + id (x) s^Y_psi)(Delta_Y(u)).
Tensor2 coderivation_defect(const NCPoly& psi, const NCPoly& u);

// Defect of commutation with tau: sigma0_psi(tau(u)) - tau(sigma0_psi(u)).
NCPoly tau_defect(const NCPoly& psi, const NCPoly& u);

// Stabilizer components, solved inside Lie(X)[m,n] against the check set
// {1, y_1, ..., y_cap} (cap < 0 means the default m+2).
SubspaceBasis stab_deltaY_basis(int m, int n, int check_cap = -1);
// Stabilizer of tau inside Lie(B)[m,n], checked against all Q<B>^0 words of
// weight <= cap plus the empty word (cap < 0 means the default m+3).
SubspaceBasis stab_tau_basis(int m, int n, int weight_cap = -1);

VerificationReport verify_stab_ls(int max_weight);
VerificationReport verify_stab_lq(int max_weight);

enum class ClosureSpace { ls, lq, stabX, stabB };
ClosureSpace closure_space_from_string(const std::string& s);
VerificationReport verify_closure(ClosureSpace space, int max_total_weight);

VerificationReport verify_theta(int max_weight);

VerificationReport lemma_checks();

// Criterion-style saturation run: raising the check caps by +2 must not
// change any solver basis for m <= the given caps.
VerificationReport verify_saturation(int max_weight_x, int max_weight_b);

// The nonvanishing tensor sum used in the weight-(m,1) obstruction.
Tensor2 nonvanishing_sum(int m);

// Dimension table entry used by the CLI and the golden files.
struct DimRecord {
    std::string space;
    int m = 0;
    int n = 0;
    int dim = 0;
    std::vector<std::string> basis;
};

// space in {liex, liey, lieb, ls, lq, stabx, stabb}.
SubspaceBasis space_basis(const std::string& space, int m, int n);
std::vector<DimRecord> dim_records(const std::string& space, int max_weight,
                                   bool with_basis);
std::string dim_records_to_json(const std::vector<DimRecord>& recs);
std::vector<DimRecord> dim_records_from_json(const std::string& text);

// Compares against (or, if absent, writes) a golden file. Returns a report.
VerificationReport golden_check(const std::string& claim, int cap,
                                const std::string& path);

} // namespace lsq
