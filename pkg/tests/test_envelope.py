from engel_lab.core.envelope import (
    gen_expansion,
    generator_tuples,
    leading,
    mono_order_key,
    multiply,
    product_expansion,
    verify_independence,
    z_mono,
)


def test_z_alone():
    assert gen_expansion([]) == {((), ()): 1}


def test_single_bracket():
    # [z, c_1] = z c_1 - c_1 z
    assert gen_expansion([1]) == {((), (1,)): 1, ((1,), ()): -1}


def test_repeated_index_multinomial():
    # [z, c_1, c_1] = z c_1^2 - 2 c_1 z c_1 + c_1^2 z
    assert gen_expansion([1, 1]) == {
        ((), (1, 1)): 1,
        ((1,), (1,)): -2,
        ((1, 1), ()): 1,
    }


def test_mixed_bracket():
    e = gen_expansion([1, 2])
    assert e == {
        ((), (1, 2)): 1,
        ((1,), (2,)): -1,
        ((2,), (1,)): -1,
        ((1, 2), ()): 1,
    }


def test_multiply_is_concatenation():
    prod = multiply({z_mono(): 1}, {z_mono(): 1})
    assert prod == {((), (), ()): 1}


def test_monomial_order_z_beats_c():
    assert mono_order_key(((), (1,))) > mono_order_key(((1,), ()))
    assert mono_order_key(((), (), ())) > mono_order_key(((), (9, 9, 9)))


def test_leading_term_of_product():
    e = product_expansion(((1,), (2, 3)))
    m, c = leading(e)
    assert m == ((), (1,), (2, 3)) and c == 1


def test_generator_tuple_count_small():
    # weight <= 3 over 2 letters: r=1 with |I|<=2 -> 1+2+3 = 6;
    # r=2 with |I1|+|I2|<=1 -> () ,() plus (i),() and (),(i): 1+2+2 = 5;
    # r=3 all empty: 1
    tups = generator_tuples(3, 2)
    assert len(tups) == 12


def test_independence_tiny():
    rep = verify_independence(max_weight=4, n=2, p=5)
    assert rep["rank"] == rep["tuples"]
