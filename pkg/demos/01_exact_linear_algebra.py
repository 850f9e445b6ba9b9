"""Tour of the exact linear algebra substrate.

Everything else in the package reduces to four operations over a prime
field: row reduction, kernels, solving, and quotient structure.
"""

from homcat.linalg import Mat, kernel_basis, quotient_structure, rank, rref, solve

# A matrix over F_5 with a dependent second row.
m = Mat.from_rows(5, [[1, 2, 0], [2, 4, 1]])
reduced, pivots = rref(m)
print("matrix over F_5:")
print(m.a)
print("reduced row echelon form (pivots", pivots, "):")
print(reduced.a)
print("rank:", rank(m))

# Kernels are exact: m @ k == 0 on the nose.
k = kernel_basis(m)
print("kernel basis columns:")
print(k.a)
print("m @ kernel is zero:", (m @ k).is_zero())

# Solving returns a verified particular solution or None.
b = Mat.from_rows(7, [[2], [3]])
a = Mat.from_rows(7, [[1, 1], [0, 1]])
x = solve(a, b)
print("\nsolving over F_7: x =", x.a[:, 0], " check:", (a @ x == b))
print("inconsistent system returns:", solve(Mat.zeros(7, 2, 2), b))

# Quotient structure: a projection whose kernel is exactly a chosen span,
# with a section splitting it.  This is how cokernels and cohomology carriers
# are built everywhere downstream.
sub = Mat.from_rows(2, [[1], [1]])
proj, section = quotient_structure(2, sub)
print("\nquotient of F_2^2 by the diagonal:")
print("projection:", proj.a, " kills the span:", (proj @ sub).is_zero())
print("projection o section is the identity:", proj @ section == Mat.identity(2, 1))
