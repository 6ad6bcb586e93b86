"""
Divergent-convolution construction: for an aperiodic central element a and a Young
pair satisfying the sequence condition, functions f ∈ L^{Φ₁}, g ∈ L^{Φ₂} with
(f ∗ g)(x) = ∞ on a neighbourhood V of the identity, realised through truncations.
"""
