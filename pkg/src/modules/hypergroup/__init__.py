"""
Discrete hypergroups given by structure constants: built-in ℤ, ℤ_m and the
Chebyshev polynomial hypergroup, plus user tables loaded from JSON.
"""
