"""
Yet Another Rank-Two Semifield checker.

Builds rank-two presemifields over finite fields, computes their isotopy
invariants (nuclei, associated linear sets, long lines, pseudoregulus
structure) and compares them against the known families.
"""
