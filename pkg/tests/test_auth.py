"""Credential, IP-binding and session behavior."""

import random

import pytest

from recordroute import auth
from recordroute.config import SecurityConfig
from recordroute.errors import (
    AccessDeniedIp,
    BadCredentials,
    DuplicateUsername,
    InvalidSession,
    NotAuthorized,
    NotFound,
    UnknownDepartment,
    ValidationFailed,
    WrongDepartment,
)
from recordroute.model import Role

from .conftest import ADMIN_IP, CLERK_IPS, FAST_SECURITY, PASSWORDS


def _random_other_ip(rng, forbidden: str) -> str:
    while True:
        ip = ".".join(str(rng.randint(1, 254)) for _ in range(4))
        if ip != forbidden:
            return ip


class TestLogin:
    def test_happy_path_issues_session(self, foundation):
        session = auth.login(
            foundation.store, "inbox1", PASSWORDS["inbox1"], CLERK_IPS["inbox1"], FAST_SECURITY
        )
        assert len(session.token) >= 32  # >= 128 bits of entropy, urlsafe encoded
        assert session.issue_ip == CLERK_IPS["inbox1"]
        assert session.expires_at > session.issued_at

    def test_right_credentials_wrong_machine_denied(self, foundation):
        with pytest.raises(AccessDeniedIp):
            auth.login(
                foundation.store, "inbox1", PASSWORDS["inbox1"], "192.168.77.2", FAST_SECURITY
            )

    def test_wrong_password_from_bound_ip(self, foundation):
        with pytest.raises(BadCredentials):
            auth.login(foundation.store, "inbox1", "nope", CLERK_IPS["inbox1"], FAST_SECURITY)

    def test_unknown_user_indistinguishable_from_wrong_password(self, foundation):
        with pytest.raises(BadCredentials) as unknown:
            auth.login(foundation.store, "ghost", "x", CLERK_IPS["inbox1"], FAST_SECURITY)
        with pytest.raises(BadCredentials) as wrong:
            auth.login(foundation.store, "inbox1", "x", CLERK_IPS["inbox1"], FAST_SECURITY)
        assert unknown.value.code == wrong.value.code


class TestAuthorize:
    def _session(self, foundation, username="inbox1"):
        ip = ADMIN_IP if username == "admin" else CLERK_IPS[username]
        return auth.login(foundation.store, username, PASSWORDS[username], ip, FAST_SECURITY)

    def test_department_scope(self, foundation):
        session = self._session(foundation)
        ctx = auth.authorize(
            foundation.store, session.token, foundation.dept_id(10), CLERK_IPS["inbox1"]
        )
        assert ctx.username == "inbox1"

    def test_wrong_department_scope(self, foundation):
        session = self._session(foundation)
        with pytest.raises(WrongDepartment):
            auth.authorize(
                foundation.store, session.token, foundation.dept_id(20), CLERK_IPS["inbox1"]
            )

    def test_admin_passes_every_scope(self, foundation):
        session = self._session(foundation, "admin")
        for code in (1, 10, 20, 31, 32):
            ctx = auth.authorize(foundation.store, session.token, foundation.dept_id(code), ADMIN_IP)
            assert ctx.is_admin
        ctx = auth.authorize(foundation.store, session.token, auth.ADMIN_ONLY, ADMIN_IP)
        assert ctx.is_admin

    def test_clerk_never_reaches_admin_scope(self, foundation):
        session = self._session(foundation)
        with pytest.raises(WrongDepartment):
            auth.authorize(foundation.store, session.token, auth.ADMIN_ONLY, CLERK_IPS["inbox1"])

    def test_token_replay_from_random_ips_always_denied(self, foundation):
        session = self._session(foundation)
        rng = random.Random(99)
        for _ in range(100):
            ip = _random_other_ip(rng, CLERK_IPS["inbox1"])
            with pytest.raises(AccessDeniedIp):
                auth.authorize(foundation.store, session.token, auth.ANY_DEPARTMENT, ip)
        # and the genuine machine still works afterwards
        assert (
            auth.authorize(
                foundation.store, session.token, auth.ANY_DEPARTMENT, CLERK_IPS["inbox1"]
            ).username
            == "inbox1"
        )

    def test_garbage_tokens_rejected(self, foundation):
        for token in ("", "etaoin", "A" * 64):
            with pytest.raises(InvalidSession):
                auth.authorize(foundation.store, token, auth.ANY_DEPARTMENT, CLERK_IPS["inbox1"])

    def test_expired_session_authorizes_nothing(self, foundation):
        expired_cfg = SecurityConfig(scrypt_log_n=4, session_ttl_seconds=0)
        session = auth.login(
            foundation.store, "inbox1", PASSWORDS["inbox1"], CLERK_IPS["inbox1"], expired_cfg
        )
        with pytest.raises(InvalidSession):
            auth.authorize(
                foundation.store, session.token, auth.ANY_DEPARTMENT, CLERK_IPS["inbox1"]
            )

    def test_logout_kills_session(self, foundation):
        session = self._session(foundation)
        auth.logout(foundation.store, session.token)
        with pytest.raises(InvalidSession):
            auth.authorize(
                foundation.store, session.token, auth.ANY_DEPARTMENT, CLERK_IPS["inbox1"]
            )


class TestCreateUser:
    def test_admin_creates_clerk(self, foundation):
        record = auth.create_user(
            foundation.store,
            foundation.users["admin"],
            username="inbox2",
            password="pw",
            dept_id=foundation.dept_id(10),
            bound_ip="10.0.0.50",
            security=FAST_SECURITY,
        )
        assert record.role is Role.CLERK
        session = auth.login(foundation.store, "inbox2", "pw", "10.0.0.50", FAST_SECURITY)
        assert session.user_id == record.user_id

    def test_non_admin_rejected(self, foundation):
        with pytest.raises(NotAuthorized):
            auth.create_user(
                foundation.store,
                foundation.users["inbox1"],
                username="x",
                password="pw",
                dept_id=foundation.dept_id(10),
                bound_ip="10.0.0.51",
                security=FAST_SECURITY,
            )

    def test_duplicate_username(self, foundation):
        with pytest.raises(DuplicateUsername):
            auth.create_user(
                foundation.store,
                foundation.users["admin"],
                username="inbox1",
                password="pw",
                dept_id=foundation.dept_id(10),
                bound_ip="10.0.0.52",
                security=FAST_SECURITY,
            )

    def test_unknown_department(self, foundation):
        with pytest.raises(UnknownDepartment):
            auth.create_user(
                foundation.store,
                foundation.users["admin"],
                username="y",
                password="pw",
                dept_id="missing",
                bound_ip="10.0.0.53",
                security=FAST_SECURITY,
            )

    def test_admin_role_must_sit_in_admin_department(self, foundation):
        with pytest.raises(ValidationFailed):
            auth.create_user(
                foundation.store,
                foundation.users["admin"],
                username="z",
                password="pw",
                dept_id=foundation.dept_id(10),
                bound_ip="10.0.0.54",
                role=Role.ADMIN,
                security=FAST_SECURITY,
            )

    def test_malformed_ip_rejected(self, foundation):
        with pytest.raises(ValidationFailed):
            auth.create_user(
                foundation.store,
                foundation.users["admin"],
                username="w",
                password="pw",
                dept_id=foundation.dept_id(10),
                bound_ip="not-an-ip",
                security=FAST_SECURITY,
            )

    def test_ipv6_binding_works(self, foundation):
        auth.create_user(
            foundation.store,
            foundation.users["admin"],
            username="v6",
            password="pw",
            dept_id=foundation.dept_id(10),
            bound_ip="2001:db8::7",
            security=FAST_SECURITY,
        )
        session = auth.login(foundation.store, "v6", "pw", "2001:db8:0::07", FAST_SECURITY)
        assert session.issue_ip == "2001:db8:0::07"


class TestRebindIp:
    def test_rebind_moves_the_binding(self, foundation):
        user_id = foundation.users["inbox1"].user_id
        auth.rebind_ip(foundation.store, foundation.users["admin"], user_id, "10.9.9.9")
        with pytest.raises(AccessDeniedIp):
            auth.login(
                foundation.store, "inbox1", PASSWORDS["inbox1"], CLERK_IPS["inbox1"], FAST_SECURITY
            )
        session = auth.login(
            foundation.store, "inbox1", PASSWORDS["inbox1"], "10.9.9.9", FAST_SECURITY
        )
        assert session.issue_ip == "10.9.9.9"

    def test_rebind_invalidates_live_sessions(self, foundation):
        session = auth.login(
            foundation.store, "inbox1", PASSWORDS["inbox1"], CLERK_IPS["inbox1"], FAST_SECURITY
        )
        auth.rebind_ip(
            foundation.store, foundation.users["admin"], foundation.users["inbox1"].user_id, "10.9.9.9"
        )
        with pytest.raises(InvalidSession):
            auth.authorize(foundation.store, session.token, auth.ANY_DEPARTMENT, "10.9.9.9")

    def test_non_admin_rejected(self, foundation):
        with pytest.raises(NotAuthorized):
            auth.rebind_ip(
                foundation.store,
                foundation.users["inbox1"],
                foundation.users["inbox1"].user_id,
                "10.9.9.9",
            )

    def test_unknown_user(self, foundation):
        with pytest.raises(NotFound):
            auth.rebind_ip(foundation.store, foundation.users["admin"], "ghost", "10.9.9.9")


class TestPasswordDigest:
    def test_round_trip(self):
        digest = auth.hash_password("s3cret سەلام", FAST_SECURITY)
        assert auth.verify_password("s3cret سەلام", digest)
        assert not auth.verify_password("s3cret", digest)

    def test_salts_differ(self):
        a = auth.hash_password("same", FAST_SECURITY)
        b = auth.hash_password("same", FAST_SECURITY)
        assert a != b
        assert auth.verify_password("same", a) and auth.verify_password("same", b)

    def test_tampered_digest_rejected(self):
        digest = auth.hash_password("pw", FAST_SECURITY)
        assert not auth.verify_password("pw", digest + "x")
        assert not auth.verify_password("pw", "md5$deadbeef")
        assert not auth.verify_password("pw", "")

    def test_store_never_holds_plaintext_passwords(self, foundation):
        from recordroute import backup
        from recordroute.backup import BackupMode

        archive = backup.export_backup(
            foundation.store, BackupMode.NONE, foundation.users["admin"]
        )
        payload = archive.payload.decode("utf-8")
        for password in PASSWORDS.values():
            assert password not in payload

    def test_scope_isolation_under_fuzzing(self, foundation):
        """No clerk context ever authorizes for a scope other than its own."""
        rng = random.Random(5)
        sessions = {
            name: auth.login(
                foundation.store, name, PASSWORDS[name], CLERK_IPS[name], FAST_SECURITY
            )
            for name in ("inbox1", "outbox1", "clerk31", "clerk32")
        }
        dept_of = {"inbox1": 10, "outbox1": 20, "clerk31": 31, "clerk32": 32}
        for _ in range(200):
            name = rng.choice(list(sessions))
            scope_code = rng.choice([1, 10, 20, 31, 32])
            scope = foundation.dept_id(scope_code)
            try:
                ctx = auth.authorize(
                    foundation.store, sessions[name].token, scope, CLERK_IPS[name]
                )
            except WrongDepartment:
                assert scope_code != dept_of[name]
            else:
                assert scope_code == dept_of[name]
                assert ctx.dept_id == scope
