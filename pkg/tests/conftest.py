import pytest

from skolemff import (
    INFINITY,
    ConstantValue,
    FieldSpec,
    Place,
    PlaceSet,
    Polynomial,
    PowerSumInstance,
    RationalFunction,
    RootOfUnity,
    field_for,
)


@pytest.fixture(scope="session")
def Q():
    return field_for(FieldSpec(0, 1))


@pytest.fixture(scope="session")
def Qi():
    return field_for(FieldSpec(0, 4))


@pytest.fixture(scope="session")
def F3():
    return field_for(FieldSpec(3, 1, 1))


@pytest.fixture(scope="session")
def F5():
    return field_for(FieldSpec(5, 1, 1))


def one_ru(fld):
    return RootOfUnity(1, ConstantValue(fld, fld.one_raw))


def neg_ru(fld):
    return RootOfUnity(2, ConstantValue(fld, fld.from_int(-1)))


def example1_instance(fld):
    """lambda = (1,1,1,1), eps = (1,1,-1,-1), r = (4,3,2,1), f = t, S = {(t), inf}."""
    t = RationalFunction.t(fld)
    S = PlaceSet([Place(Polynomial.t(fld)), INFINITY])
    return PowerSumInstance(
        lambdas=(RationalFunction.one(fld),) * 4,
        epsilons=(one_ru(fld), one_ru(fld), neg_ru(fld), neg_ru(fld)),
        exponents=(4, 3, 2, 1),
        f=t,
        places=S,
    )


def example2_instance(fld):
    """lambda = (t, -1/t), r = (2, 1), f = t^2, S = {(t), inf}."""
    t = RationalFunction.t(fld)
    S = PlaceSet([Place(Polynomial.t(fld)), INFINITY])
    return PowerSumInstance(
        lambdas=(t, -(t**-1)),
        epsilons=(one_ru(fld), one_ru(fld)),
        exponents=(2, 1),
        f=t**2,
        places=S,
    )


@pytest.fixture
def ex1(Q):
    return example1_instance(Q)


@pytest.fixture
def ex2(Q):
    return example2_instance(Q)
