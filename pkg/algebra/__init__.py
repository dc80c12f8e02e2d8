"""
Exact algebra behind the staraut checks: roots of unity and rational
matrices, finite abelian groups, quadratic forms, cocycles, graded and Chu
pairings, and profunctors on finite categories.
"""
