#!/usr/bin/env python3
# Copyright (c) The wignerff authors. All Rights Reserved


import itertools
import os
import unittest

import mock
from wignerff.field.gf import (
    MAX_ORDER_ENV,
    arith,
    field_of_order,
    field_tables,
    format_element,
    is_irreducible,
    make_field,
    multiplicative_order,
    parse_element,
    primitive_element,
    trace,
)
from wignerff.utils.errors import (
    FieldError,
    FieldMismatchError,
    MalformedInputError,
    ZeroInverseError,
)


class TestFieldConstruction(unittest.TestCase):
    def test_f4_modulus(self):
        spec = make_field(2, 2)
        self.assertEqual(spec.modulus, (1, 1, 1))
        self.assertEqual(spec.N, 4)

    def test_prime_field(self):
        spec = make_field(3, 1)
        self.assertEqual(spec.modulus, (0, 1))
        self.assertEqual([int(x) for x in spec.elements()], [0, 1, 2])

    def test_smallest_cubic(self):
        spec = make_field(2, 3)
        self.assertEqual(spec.modulus, (1, 1, 0, 1))
        self.assertTrue(is_irreducible(spec.modulus, 2))
        # x^3 + 1 = (x + 1)(x^2 + x + 1)
        self.assertFalse(is_irreducible((1, 0, 0, 1), 2))

    def test_f9_modulus(self):
        self.assertEqual(make_field(3, 2).modulus, (1, 0, 1))

    def test_bad_arguments(self):
        with self.assertRaises(FieldError):
            make_field(4, 1)
        with self.assertRaises(FieldError):
            make_field(2, 7)
        with self.assertRaises(FieldError):
            field_of_order(6)

    def test_cap_from_env(self):
        with mock.patch.dict(os.environ, {MAX_ORDER_ENV: "8"}):
            with self.assertRaises(FieldError):
                make_field(3, 2)
            self.assertEqual(make_field(2, 3).N, 8)
        with mock.patch.dict(os.environ, {MAX_ORDER_ENV: "128"}):
            self.assertEqual(make_field(2, 7).N, 128)

    def test_field_of_order(self):
        self.assertEqual(field_of_order(9).key(), (3, 2, (1, 0, 1)))
        self.assertEqual(field_of_order(5).r, 5)


class TestFieldArithmetic(unittest.TestCase):
    def test_f4_tables(self):
        spec = make_field(2, 2)
        add, mul = field_tables(spec)
        self.assertEqual(
            add,
            [
                ["0", "1", "w", "wbar"],
                ["1", "0", "wbar", "w"],
                ["w", "wbar", "0", "1"],
                ["wbar", "w", "1", "0"],
            ],
        )
        self.assertEqual(
            mul,
            [
                ["0", "0", "0", "0"],
                ["0", "1", "w", "wbar"],
                ["0", "w", "wbar", "1"],
                ["0", "wbar", "1", "w"],
            ],
        )

    def test_arith_ops(self):
        spec = make_field(2, 2)
        w, wbar = parse_element(spec, "w"), parse_element(spec, "wbar")
        self.assertEqual(arith("mul", w, w), wbar)
        self.assertEqual(arith("add", w, wbar), spec.one)
        self.assertEqual(arith("inv", w), wbar)
        self.assertEqual(arith("pow", w, 3), spec.one)
        self.assertEqual(arith("neg", w), w)
        with self.assertRaises(FieldError):
            arith("div", w, w)

    def test_inverse_law(self):
        for N in (2, 3, 4, 5, 8, 9):
            spec = field_of_order(N)
            for x in spec.nonzero_elements():
                self.assertEqual(x * x.inverse(), spec.one)
        with self.assertRaises(ZeroInverseError):
            make_field(3).zero.inverse()
        with self.assertRaises(ZeroDivisionError):
            make_field(2, 2).one / make_field(2, 2).zero

    def test_field_axioms(self):
        for N in (2, 3, 4, 5, 7, 8, 9):
            spec = field_of_order(N)
            elems = spec.elements()
            for x, y, z in itertools.product(elems, repeat=3):
                self.assertEqual((x + y) + z, x + (y + z))
                self.assertEqual((x * y) * z, x * (y * z))
                self.assertEqual(x * (y + z), x * y + x * z)
            for x, y in itertools.product(elems, repeat=2):
                self.assertEqual(x + y, y + x)
                self.assertEqual(x * y, y * x)
                self.assertEqual(x - y + y, x)

    def test_cross_field(self):
        with self.assertRaises(FieldMismatchError):
            make_field(2, 2).one + make_field(2, 3).one


class TestTrace(unittest.TestCase):
    def test_f4_trace(self):
        spec = make_field(2, 2)
        self.assertEqual([int(trace(x)) for x in spec.elements()], [0, 0, 1, 1])

    def test_trace_additive(self):
        spec = make_field(2, 3)
        for x, y in itertools.product(spec.elements(), repeat=2):
            self.assertEqual(trace(x + y), trace(x) + trace(y))

    def test_trace_in_prime_subfield(self):
        for N in (4, 8, 9, 16, 25, 27, 32, 49, 64):
            spec = field_of_order(N)
            for x in spec.elements():
                self.assertLess(trace(x).index, spec.r)
                c = spec.from_prime(2)
                self.assertEqual(trace(c * x), c * trace(x))

    def test_prime_trace_is_identity(self):
        spec = make_field(7)
        for x in spec.elements():
            self.assertEqual(trace(x), x)


class TestPrimitiveElement(unittest.TestCase):
    def test_primitive(self):
        self.assertEqual(format_element(primitive_element(make_field(2, 2))), "w")
        self.assertEqual(primitive_element(make_field(2)), make_field(2).one)
        z8 = primitive_element(make_field(2, 3))
        self.assertEqual(multiplicative_order(z8), 7)
        self.assertEqual(primitive_element(make_field(3, 2)).index, 4)
        self.assertEqual(int(primitive_element(make_field(5))), 2)


class TestElementText(unittest.TestCase):
    def test_parse_format(self):
        for N in (4, 8, 9, 5):
            spec = field_of_order(N)
            for x in spec.elements():
                self.assertEqual(parse_element(spec, format_element(x)), x)
        spec8 = make_field(2, 3)
        self.assertEqual(format_element(spec8.element(6)), "011")
        self.assertEqual(parse_element(spec8, 6), spec8.element(6))

    def test_malformed(self):
        spec = make_field(2, 2)
        for text in ("2", "omega", "111", ""):
            with self.assertRaises(MalformedInputError):
                parse_element(spec, text)
        with self.assertRaises(MalformedInputError):
            parse_element(spec, make_field(3).one)
