import math
from unittest import TestCase
import numpy as np
from fracgal.exprfield import (
    parse, evaluate, tokenize, Num, Var, Const, Neg, BinOp, Call)
from fracgal.exceptions import (
    FracGalSyntaxError, FracGalUnknownIdentifierError, FracGalDomainError,
    FracGalExpressionError)


class TestParse(TestCase):

    def test_precedence(self):
        self.assertEqual(evaluate(parse('2+3*4'), 0.0), 14.0)
        self.assertEqual(evaluate(parse('(2+3)*4'), 0.0), 20.0)
        self.assertEqual(evaluate(parse('2*3^2'), 0.0), 18.0)
        self.assertEqual(evaluate(parse('8/4/2'), 0.0), 1.0)
        self.assertEqual(evaluate(parse('10-4-3'), 0.0), 3.0)

    def test_power_right_associative(self):
        self.assertEqual(evaluate(parse('2^3^2'), 0.0), 512.0)
        self.assertEqual(evaluate(parse('-2^2'), 0.0), -4.0)
        self.assertEqual(evaluate(parse('2^-1'), 0.0), 0.5)

    def test_tree(self):
        expr = parse('-x + sin(pi * t)')
        self.assertEqual(
            expr, BinOp('+', Neg(Var('x')),
                        Call('sin', BinOp('*', Const('pi'), Var('t')))))
        self.assertEqual(expr.variables(), frozenset(['x', 't']))
        self.assertEqual(parse(str(expr)), expr)

    def test_numbers(self):
        for text, value in (('3', 3.0), ('2.5', 2.5), ('.5', 0.5),
                            ('1e-3', 1e-3), ('2.E2', 200.0)):
            self.assertEqual(parse(text), Num(value))

    def test_functions(self):
        expr = parse('exp(t) + cos(x) + sqrt(4) + abs(-y)')
        self.assertAlmostEqual(evaluate(expr, 1.0, (0.0, 2.0)),
                               math.e + 1.0 + 2.0 + 2.0, places=14)

    def test_broadcast(self):
        expr = parse('t * x')
        t = np.array([0.0, 1.0, 2.0])
        np.testing.assert_array_equal(evaluate(expr, t, (2.0,)),
                                      [0.0, 2.0, 4.0])

    def test_tokens(self):
        kinds = [tok.kind for tok in tokenize('a1 + 2.5')]
        self.assertEqual(kinds, ['name', 'op', 'number', 'end'])


class TestParseErrors(TestCase):

    def test_incomplete(self):
        with self.assertRaises(FracGalSyntaxError) as cm:
            parse('x^')
        self.assertEqual(cm.exception.offset, 2)

    def test_unbalanced(self):
        with self.assertRaises(FracGalSyntaxError) as cm:
            parse('(1 + x')
        self.assertEqual(cm.exception.offset, 6)
        with self.assertRaises(FracGalSyntaxError):
            parse('1 + x)')

    def test_bad_character(self):
        with self.assertRaises(FracGalSyntaxError) as cm:
            parse('1 $ 2')
        self.assertEqual(cm.exception.offset, 2)

    def test_byte_offsets(self):
        with self.assertRaises(FracGalSyntaxError) as cm:
            parse('1 + é')
        self.assertEqual(cm.exception.offset, 4)
        with self.assertRaises(FracGalSyntaxError) as cm:
            parse('é')
        self.assertEqual(cm.exception.offset, 0)

    def test_unknown_identifier(self):
        with self.assertRaises(FracGalUnknownIdentifierError) as cm:
            parse('2 * z')
        self.assertEqual(cm.exception.name, 'z')
        self.assertEqual(cm.exception.offset, 4)
        with self.assertRaises(FracGalUnknownIdentifierError):
            parse('y', variables=('t', 'x'))

    def test_variable_exponent(self):
        with self.assertRaises(FracGalSyntaxError):
            parse('2^t')
        self.assertEqual(evaluate(parse('t^(1/2)'), 4.0), 2.0)

    def test_function_without_call(self):
        with self.assertRaises(FracGalSyntaxError):
            parse('sin + 1')

    def test_hierarchy(self):
        self.assertTrue(issubclass(FracGalSyntaxError,
                                   FracGalExpressionError))
        self.assertTrue(issubclass(FracGalDomainError,
                                   FracGalExpressionError))


class TestEvaluate(TestCase):

    def test_sqrt_negative(self):
        with self.assertRaises(FracGalDomainError):
            evaluate(parse('sqrt(x - 1)'), 0.0, (0.5,))

    def test_division_by_zero(self):
        with self.assertRaises(FracGalDomainError):
            evaluate(parse('1 / (t - 1)'), 1.0)
        with self.assertRaises(FracGalDomainError):
            evaluate(parse('1 / t'), np.array([0.5, 0.0]))

    def test_fractional_power_of_negative(self):
        with self.assertRaises(FracGalDomainError):
            evaluate(parse('(x - 1)^0.5'), 0.0, (0.0,))

    def test_overflow(self):
        with self.assertRaises(FracGalDomainError) as cm:
            evaluate(parse('exp(1000 * t)'), np.array([0.0, 1.0]))
        self.assertEqual(cm.exception.subexpr, parse('exp(1000 * t)'))
        with self.assertRaises(FracGalDomainError):
            evaluate(parse('1e300 * 1e300 * t'), 1.0)
        self.assertEqual(evaluate(parse('exp(-1000 * t)'), 1.0), 0.0)

    def test_missing_variable(self):
        with self.assertRaises(FracGalUnknownIdentifierError):
            evaluate(parse('x + y'), 0.0, (1.0,))

    def test_scalar_result(self):
        value = evaluate(parse('pi'), 0.0)
        self.assertIsInstance(value, float)
        self.assertEqual(value, math.pi)
