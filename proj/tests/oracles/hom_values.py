"""Brute-force weighted homomorphism numbers with Python fractions. Values
printed here are frozen into tests/unit/test_hom.cpp."""
from fractions import Fraction as Q
import itertools


def hom_partial(k, n, edges, alpha, beta, phi):
    m = len(alpha)
    total = Q(0)
    for rest in itertools.product(range(m), repeat=n - k):
        psi = list(phi) + list(rest)
        term = Q(1)
        for x in range(k, n):
            term *= alpha[psi[x]]
        for u, v, mult in edges:
            term *= beta[psi[u]][psi[v]] ** mult
        total += term
    return total


def hom(n, edges, alpha, beta):
    return hom_partial(0, n, edges, alpha, beta, [])


half_p3 = ([Q(1)] * 3, [[0, Q(1, 2), 0], [Q(1, 2), 0, 1], [0, 1, 0]])
looped_p3 = ([Q(1)] * 3, [[2, 1, 0], [1, 0, 1], [0, 1, 0]])
wp2 = ([Q(1, 3), Q(2, 3)], [[0, 1], [1, 0]])
c4 = ([Q(1)] * 4, [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])

path3 = (3, [(0, 1, 1), (1, 2, 1)])
triangle = (3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
double_edge = (2, [(0, 1, 2)])
star_k13 = (4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])

print("half_p3 path3", hom(*path3, *half_p3))
print("half_p3 double_edge", hom(*double_edge, *half_p3))
print("looped_p3 triangle", hom(*triangle, *looped_p3))
print("looped_p3 path3", hom(*path3, *looped_p3))
print("wp2 path3", hom(*path3, *wp2))
print("wp2 star", hom(*star_k13, *wp2))
print("c4 star", hom(*star_k13, *c4))
# 2-labeled path label1 - u - label2 on looped_p3 at phi = (0, 2)
print("looped_p3 2-path phi(0,2)", hom_partial(2, 3, [(0, 2, 1), (2, 1, 1)], *looped_p3, [0, 2]))
print("looped_p3 2-path phi(0,0)", hom_partial(2, 3, [(0, 2, 1), (2, 1, 1)], *looped_p3, [0, 0]))
