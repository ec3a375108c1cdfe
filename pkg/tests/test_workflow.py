"""Lifecycle operations against a seeded foundation."""

import random
from datetime import date

import pytest

from recordroute import workflow
from recordroute.errors import (
    AlreadyPublished,
    DuplicateIncomingNumber,
    ImmutableField,
    NotAtOutgoing,
    NotAuthorized,
    NotFound,
    SelfRedirect,
    UnknownDepartment,
    ValidationFailed,
)
from recordroute.model import ApplicationDraft, AppStatus, EventKind

from .oracles import replay_scan, unique_drafts

REFERENCE_DRAFT = dict(
    year=2009,
    incoming_number=365,
    type_code=31,
    office_of_origin="engenering collage",
    subject="support",
    person_name="dina yousif",
    incoming_date=date(2009, 9, 1),
)


def draft(**overrides) -> ApplicationDraft:
    return ApplicationDraft(**{**REFERENCE_DRAFT, **overrides})


class TestRegister:
    def test_register_lands_at_incoming_archive(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        assert app.status is AppStatus.REGISTERED
        assert app.current_location == foundation.dept_id(10)
        assert app.subject == "support"
        assert app.person_name == "dina yousif"
        events = foundation.store.events_for(app.app_id)
        assert [e.kind for e in events] == [EventKind.REGISTERED]

    def test_register_with_direction_moves_immediately(self, foundation):
        app = workflow.register_application(
            foundation.store,
            foundation.users["inbox1"],
            draft(directed_to=foundation.dept_id(31)),
        )
        assert app.status is AppStatus.DIRECTED
        assert app.current_location == foundation.dept_id(31)
        kinds = [e.kind for e in foundation.store.events_for(app.app_id)]
        assert kinds == [EventKind.REGISTERED, EventKind.REDIRECTED]

    def test_duplicate_incoming_number_rejected(self, foundation):
        workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(DuplicateIncomingNumber):
            workflow.register_application(
                foundation.store, foundation.users["inbox1"], draft(subject="other")
            )

    def test_same_number_different_year_allowed(self, foundation):
        workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        app = workflow.register_application(
            foundation.store, foundation.users["inbox1"], draft(year=2010)
        )
        assert app.year == 2010

    def test_empty_subject_rejected(self, foundation):
        with pytest.raises(ValidationFailed) as exc:
            workflow.register_application(
                foundation.store, foundation.users["inbox1"], draft(subject="")
            )
        assert exc.value.field == "subject"

    def test_non_incoming_clerk_rejected(self, foundation):
        for username in ("outbox1", "clerk31", "admin"):
            with pytest.raises(NotAuthorized):
                workflow.register_application(foundation.store, foundation.users[username], draft())

    def test_unknown_directed_to_rejected(self, foundation):
        with pytest.raises(UnknownDepartment):
            workflow.register_application(
                foundation.store, foundation.users["inbox1"], draft(directed_to="nope")
            )

    def test_unknown_type_code_rejected(self, foundation):
        with pytest.raises(UnknownDepartment):
            workflow.register_application(
                foundation.store, foundation.users["inbox1"], draft(type_code=77)
            )


class TestRedirect:
    def test_single_hop(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        event = workflow.redirect_application(
            foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(31)
        )
        assert event.from_dept == foundation.dept_id(10)
        assert event.to_dept == foundation.dept_id(31)
        moved = foundation.store.get_application(app.app_id)
        assert moved.current_location == foundation.dept_id(31)
        assert moved.status is AppStatus.DIRECTED

    def test_clerk_elsewhere_cannot_redirect(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(NotAuthorized):
            workflow.redirect_application(
                foundation.store, foundation.users["clerk31"], app.app_id, foundation.dept_id(32)
            )

    def test_incoming_archive_loses_control_after_redirect(self, foundation):
        # Resolved interpretation: once directed away, the archive may not act.
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        workflow.redirect_application(
            foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(31)
        )
        with pytest.raises(NotAuthorized):
            workflow.redirect_application(
                foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(32)
            )

    def test_self_redirect_rejected(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(SelfRedirect):
            workflow.redirect_application(
                foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(10)
            )

    def test_unknown_destination_rejected(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(UnknownDepartment):
            workflow.redirect_application(
                foundation.store, foundation.users["inbox1"], app.app_id, "missing-dept"
            )

    def test_missing_application(self, foundation):
        with pytest.raises(NotFound):
            workflow.redirect_application(
                foundation.store, foundation.users["inbox1"], "nope", foundation.dept_id(31)
            )

    def test_chain_to_outgoing_tracks_every_hop(self, foundation):
        store = foundation.store
        app = workflow.register_application(store, foundation.users["inbox1"], draft())
        hops = [
            ("inbox1", 31),
            ("clerk31", 32),
            ("clerk32", 20),
        ]
        for username, dest in hops:
            workflow.redirect_application(
                store, foundation.users[username], app.app_id, foundation.dept_id(dest)
            )
            current = store.get_application(app.app_id)
            trail = workflow.track_application(store, app.app_id)
            assert replay_scan(trail) == (current.current_location, current.status.value)
        kinds = [e.kind for e in workflow.track_application(store, app.app_id)]
        assert kinds == [EventKind.REGISTERED] + [EventKind.REDIRECTED] * 3


class TestUpdate:
    def test_legal_update_appends_event(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        updated = workflow.update_application(
            foundation.store, foundation.users["inbox1"], app.app_id, {"notes": "urgent"}
        )
        assert updated.notes == "urgent"
        trail = foundation.store.events_for(app.app_id)
        assert trail[-1].kind is EventKind.UPDATED
        assert "notes" in trail[-1].note

    def test_identity_fields_frozen(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        for field in ("app_id", "year", "incoming_number", "incoming_date"):
            with pytest.raises(ImmutableField):
                workflow.update_application(
                    foundation.store, foundation.users["inbox1"], app.app_id, {field: 999}
                )

    def test_unknown_field_rejected(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(ValidationFailed):
            workflow.update_application(
                foundation.store, foundation.users["inbox1"], app.app_id, {"status": "published"}
            )

    def test_empty_update_rejected(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(ValidationFailed):
            workflow.update_application(
                foundation.store, foundation.users["inbox1"], app.app_id, {}
            )

    def test_wrong_location_rejected(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(NotAuthorized):
            workflow.update_application(
                foundation.store, foundation.users["clerk31"], app.app_id, {"notes": "x"}
            )

    def test_ten_random_updates_last_writer_wins(self, foundation):
        rng = random.Random(7)
        store = foundation.store
        app = workflow.register_application(store, foundation.users["inbox1"], draft())
        fields = ["subject", "person_name", "notes", "office_of_origin"]
        last = {}
        for i in range(10):
            name = rng.choice(fields)
            value = f"value-{i}-{rng.randint(0, 99)}"
            workflow.update_application(
                store, foundation.users["inbox1"], app.app_id, {name: value}
            )
            last[name] = value
        final = store.get_application(app.app_id)
        for name, value in last.items():
            assert getattr(final, name) == value
        assert store.count_events(app.app_id) == 1 + 10


class TestPublish:
    def _to_outgoing(self, foundation, d=None):
        app = workflow.register_application(
            foundation.store, foundation.users["inbox1"], d or draft()
        )
        workflow.redirect_application(
            foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(20)
        )
        return app

    def test_publish_reference_record(self, foundation):
        app = self._to_outgoing(foundation)
        record = workflow.publish_application(
            foundation.store,
            foundation.users["outbox1"],
            app.app_id,
            date_of_signature=date(2009, 9, 9),
            publish_date=date(2009, 12, 7),
            office_goto="engenering collage",
        )
        assert record.publish_no == 1
        stored = foundation.store.get_application(app.app_id)
        assert stored.status is AppStatus.PUBLISHED

    def test_double_publish_rejected(self, foundation):
        app = self._to_outgoing(foundation)
        workflow.publish_application(
            foundation.store, foundation.users["outbox1"], app.app_id,
            date(2009, 9, 9), date(2009, 12, 7), "x",
        )
        with pytest.raises(AlreadyPublished):
            workflow.publish_application(
                foundation.store, foundation.users["outbox1"], app.app_id,
                date(2009, 9, 9), date(2009, 12, 7), "x",
            )

    def test_publish_requires_outgoing_location(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        with pytest.raises(NotAtOutgoing):
            workflow.publish_application(
                foundation.store, foundation.users["outbox1"], app.app_id,
                date(2009, 9, 9), date(2009, 12, 7), "x",
            )

    def test_publish_requires_outgoing_clerk(self, foundation):
        app = self._to_outgoing(foundation)
        with pytest.raises(NotAuthorized):
            workflow.publish_application(
                foundation.store, foundation.users["clerk31"], app.app_id,
                date(2009, 9, 9), date(2009, 12, 7), "x",
            )

    def test_publish_numbers_sequential_within_year(self, foundation):
        rng = random.Random(11)
        numbers = []
        for i, d in enumerate(unique_drafts(rng, 6, year=2009)):
            app = self._to_outgoing(foundation, d)
            record = workflow.publish_application(
                foundation.store, foundation.users["outbox1"], app.app_id,
                date(2009, 9, 9), date(2009, 12, 7), "office",
            )
            numbers.append(record.publish_no)
        assert numbers == [1, 2, 3, 4, 5, 6]

    def test_publish_numbers_independent_per_year(self, foundation):
        rng = random.Random(13)
        for year in (2009, 2010):
            d = unique_drafts(rng, 1, year=year)[0]
            app = self._to_outgoing(foundation, d)
            record = workflow.publish_application(
                foundation.store, foundation.users["outbox1"], app.app_id,
                date(year, 9, 9), date(year, 12, 7), "office",
            )
            assert record.publish_no == 1

    def test_published_application_fully_frozen(self, foundation):
        app = self._to_outgoing(foundation)
        workflow.publish_application(
            foundation.store, foundation.users["outbox1"], app.app_id,
            date(2009, 9, 9), date(2009, 12, 7), "x",
        )
        with pytest.raises(AlreadyPublished):
            workflow.redirect_application(
                foundation.store, foundation.users["outbox1"], app.app_id, foundation.dept_id(31)
            )
        with pytest.raises(AlreadyPublished):
            workflow.update_application(
                foundation.store, foundation.users["outbox1"], app.app_id, {"notes": "y"}
            )


class TestTrack:
    def test_fresh_application_single_event(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        trail = workflow.track_application(foundation.store, app.app_id)
        assert [e.kind for e in trail] == [EventKind.REGISTERED]

    def test_full_lifecycle_ordering(self, foundation):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], draft())
        workflow.redirect_application(
            foundation.store, foundation.users["inbox1"], app.app_id, foundation.dept_id(31)
        )
        workflow.redirect_application(
            foundation.store, foundation.users["clerk31"], app.app_id, foundation.dept_id(20)
        )
        workflow.publish_application(
            foundation.store, foundation.users["outbox1"], app.app_id,
            date(2009, 9, 9), date(2009, 12, 7), "x",
        )
        kinds = [e.kind for e in workflow.track_application(foundation.store, app.app_id)]
        assert kinds == [
            EventKind.REGISTERED,
            EventKind.REDIRECTED,
            EventKind.REDIRECTED,
            EventKind.PUBLISHED,
        ]

    def test_unknown_application(self, foundation):
        with pytest.raises(NotFound):
            workflow.track_application(foundation.store, "missing")


def _random_legal_op(rng, foundation, app_id, users_by_dept):
    """Perform one random legal operation; returns False when app is closed."""
    store = foundation.store
    app = store.get_application(app_id)
    if app.status is AppStatus.PUBLISHED:
        return False
    holder = users_by_dept[app.current_location]
    choice = rng.random()
    outgoing_id = foundation.dept_id(20)
    if choice < 0.45:
        destinations = [d for d in foundation.departments.values() if d.dept_id != app.current_location]
        workflow.redirect_application(store, holder, app_id, rng.choice(destinations).dept_id)
    elif choice < 0.8:
        workflow.update_application(
            store, holder, app_id, {"notes": f"n{rng.randint(0, 9999)}"}
        )
    elif app.current_location == outgoing_id:
        workflow.publish_application(
            store, users_by_dept[outgoing_id], app_id,
            date(app.year, 9, 9), date(app.year, 12, 7), "office",
        )
    else:
        workflow.update_application(
            store, holder, app_id, {"subject": f"s{rng.randint(0, 9999)}"}
        )
    return True


def test_replay_soundness_over_random_sequences(foundation):
    """Replaying the trail always reproduces the stored (location, status)."""
    rng = random.Random(42)
    users_by_dept = {
        foundation.dept_id(10): foundation.users["inbox1"],
        foundation.dept_id(20): foundation.users["outbox1"],
        foundation.dept_id(31): foundation.users["clerk31"],
        foundation.dept_id(32): foundation.users["clerk32"],
        foundation.dept_id(1): foundation.users["admin"],
    }
    for i, d in enumerate(unique_drafts(rng, 20)):
        app = workflow.register_application(foundation.store, foundation.users["inbox1"], d)
        for _ in range(rng.randint(0, 25)):
            if not _random_legal_op(rng, foundation, app.app_id, users_by_dept):
                break
        stored = foundation.store.get_application(app.app_id)
        trail = workflow.track_application(foundation.store, app.app_id)
        assert replay_scan(trail) == (stored.current_location, stored.status.value)
        assert trail[0].kind is EventKind.REGISTERED
        assert [e.seq for e in trail] == list(range(1, len(trail) + 1))
        # identity immutability across the whole history
        assert (stored.year, stored.incoming_number) == (d.year, d.incoming_number)
        assert stored.incoming_date == d.incoming_date


def test_location_guard_checkable_from_event_log(foundation):
    """Every hop's from_dept equals the location the previous events imply."""
    rng = random.Random(43)
    users_by_dept = {
        foundation.dept_id(code): foundation.users[name]
        for code, name in ((10, "inbox1"), (20, "outbox1"), (31, "clerk31"), (32, "clerk32"))
    }
    users_by_dept[foundation.dept_id(1)] = foundation.users["admin"]
    app = workflow.register_application(
        foundation.store, foundation.users["inbox1"], unique_drafts(rng, 1)[0]
    )
    for _ in range(30):
        if not _random_legal_op(rng, foundation, app.app_id, users_by_dept):
            break
    trail = workflow.track_application(foundation.store, app.app_id)
    location = trail[0].to_dept
    for ev in trail[1:]:
        if ev.kind is EventKind.REDIRECTED:
            assert ev.from_dept == location
            location = ev.to_dept
