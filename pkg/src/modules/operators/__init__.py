"""
Weighted convolution operators T_g f = f ∗ g and T̃_g μ = μ ∗ g, and the criterion
F_g(x) = ‖L_x g‖_{Φ,w} / w(x) whose vanishing at infinity characterises compactness.
"""
