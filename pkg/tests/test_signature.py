import pytest

from cycop.errors import DomainError, ValidationError
from cycop.naming import Bijection
from cycop.signature import BaseParameter, DecoratedInstance, Signature, act, instance

F = BaseParameter("f", ("x", "y", "z"))


def test_instance_attaches_positionally():
    f = instance(F, ["a", "b", "c"])
    assert f.variables == {"a", "b", "c"}
    assert f.current("y") == "b"
    assert f.slots() == ["a", "b", "c"]


def test_instance_arity_mismatch():
    with pytest.raises(DomainError):
        instance(F, ["a", "b"])


def test_attachment_must_land_on_profile():
    with pytest.raises(DomainError):
        DecoratedInstance(F, Bijection({"a": "x"}))


def test_profiles_are_nonempty_and_distinct():
    with pytest.raises(ValidationError):
        BaseParameter("f", ())
    with pytest.raises(ValidationError):
        BaseParameter("f", ("x", "x"))


def test_act_composes():
    f = instance(F, ["a", "b", "c"])
    s = Bijection({"p": "a", "q": "b", "r": "c"})
    t = Bijection({"c": "p", "a": "q", "b": "r"})
    assert act(act(f, s), t) == act(f, s @ t)
    assert act(f, s).slots() == ["p", "q", "r"]
    with pytest.raises(DomainError):
        act(f, Bijection({"p": "a"}))


def test_signature_rejects_conflicting_redeclaration():
    sig = Signature()
    sig.declare("f", "xyz")
    assert sig.declare("f", "xyz") is sig["f"]
    with pytest.raises(ValidationError):
        sig.declare("f", "xy")
    with pytest.raises(ValidationError):
        sig["missing"]
