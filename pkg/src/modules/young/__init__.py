"""Young-function calculus."""
