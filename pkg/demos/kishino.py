"""A knot the polynomial invariant cannot see, certified nontrivial mod 3.

Run with: python3 demos/kishino.py
"""

from biquandles import gap_text, kishino_certificate

cert = kishino_certificate(prime=3)

# the polynomial invariant of this presentation vanishes, exactly as it
# would on a trivial knot, so it cannot decide anything here
print("polynomial invariant of the presentation:", gap_text(cert.presentation))
print()

# the quaternionic module does better: reducing its relations mod 3 forces
# one generator to zero yet leaves a module of positive dimension, which a
# trivial knot cannot have
print(cert.render())
