# Extracting the holonomy from the subspace path alone
# =====================================================
#
# The projected evolution operator mixes two ingredients: the geometric
# transformation of the moving subspace and the dynamical phases of the
# states inside it.  A Wilson line, the path-ordered chain of overlaps
# between neighboring frames along the loop, sees only the subspace path,
# so comparing it with the projected evolution separates the two.

import numpy as np

from holodfs import (
    SubspaceFrame,
    analytic_gate_1q,
    build_h1,
    dfs3_frame,
    discretized_holonomy,
    evolve_and_project,
    logical_frame_1q,
    params_for_rotation,
    restrict,
)

np.set_printoptions(precision=6, suppress=True)

# --- the Hadamard loop, where the dynamical part vanishes ----------------------
g = params_for_rotation(3 * np.pi / 4, np.pi)
h, _ = restrict(build_h1(g.couplings()), dfs3_frame())
frame = logical_frame_1q(effective=True)
target = evolve_and_project(h, frame, g.tau).holonomy
print("projected evolution after the loop:")
print(np.round(target, 6))

print("\nWilson-line chain vs step count (first-order convergence):")
print("steps     |W - holonomy|")
previous = None
for steps in (1000, 2000, 4000, 8000, 16000):
    w = discretized_holonomy(h, frame, g.tau, steps)
    error = np.linalg.norm(w - target)
    note = f"  (ratio {previous / error:.3f})" if previous else ""
    print(f"{steps:6d}    {error:.3e}{note}")
    previous = error
print("the error halves when the step count doubles, and the limit agrees")
print("with the closed-form gate:")
print(np.round(discretized_holonomy(h, frame, g.tau, 16000), 4))
print("vs analytic:")
print(np.round(analytic_gate_1q(3 * np.pi / 4, np.pi), 4))

# --- a stationary subspace with dynamical phases -------------------------------
# Frame of two eigenvectors of a diagonal generator: the subspace never
# moves, so the geometric content is trivial even though the states pick
# up large dynamical phases.
h_diag = np.diag([0.3, -0.7, 1.1]).astype(complex)
frame2 = SubspaceFrame(n_qubits=3, labels=("001", "100"),
                       vectors=np.eye(3)[:, :2])
wilson = discretized_holonomy(h_diag, frame2, 2.0, 2000)
projected = evolve_and_project(h_diag, frame2, 2.0).holonomy
print("\nstationary eigenvector frame:")
print("Wilson line:")
print(np.round(wilson, 6))
print("projected evolution (dynamical phases only):")
print(np.round(projected, 6))
print("the Wilson line is blind to dynamical phases; the two agree exactly")
print("when the projected Hamiltonian block vanishes, which is the")
print("parallel-transport condition the gate construction enforces")
