import json
import os
import signal
import subprocess
import sys
import threading
import time

import httpx
import pytest

from lexispec.errors import AddressInUse
from lexispec.fixture import load_fixture
from lexispec.hierarchy import build_graph
from lexispec.service import ServiceConfig, serve
from lexispec.session import replay_session

DATA = "data"


@pytest.fixture(scope="module")
def service_db():
    db = load_fixture(f"{DATA}/mini.wn")
    return db, build_graph(db)


def start(service_db, store, **kwargs):
    db, graph = service_db
    config = ServiceConfig(
        db=db,
        graph=graph,
        corpus_path=f"{DATA}/sample_corpus.tsv",
        store_dir=str(store),
        port=0,
        fsync_on_append=False,
        **kwargs,
    )
    return serve(config)


@pytest.fixture()
def handle(service_db, tmp_path):
    handle = start(service_db, tmp_path / "store")
    yield handle
    handle.shutdown()


def get(handle, path):
    return httpx.get(handle.url + path)


def post(handle, path, body):
    return httpx.post(handle.url + path, json=body)


# -- reads --------------------------------------------------------------------


def test_synsets_lists_senses_in_order(handle):
    response = get(handle, "/synsets?lemma=rip&pos=v")
    assert response.status_code == 200
    doc = response.json()
    assert doc["schemaVersion"] == 1
    keys = [s["key"] for s in doc["synsets"]]
    assert len(keys) == 4
    assert keys[3] == "rip.v.04"
    assert all("gloss" in s for s in doc["synsets"])


def test_synset_detail(handle):
    doc = get(handle, "/synset/criticize.v.01").json()
    assert doc["synset"]["lemmas"][0] == "criticize"
    assert "rip.v.04" in doc["synset"]["hyponyms"]


def test_specificity_direct_relation(handle):
    response = get(handle, "/specificity?a=rip.v.04&b=criticize.v.01")
    doc = response.json()
    assert doc["verdict"] == "first_more_specific"
    assert doc["case"] == "direct_relation"
    assert doc["chain"] == ["rip.v.04", "criticize.v.01"]


def test_sisters_and_hyponyms(handle):
    sisters = get(handle, "/sisters/rip.v.04").json()
    assert {c["key"] for c in sisters["candidates"]} == {"attack.v.02", "barrage.v.01"}
    hyponyms = get(handle, "/hyponyms/criticize.v.01").json()
    assert "attack.v.02" in {c["key"] for c in hyponyms["candidates"]}


def test_paths(handle):
    doc = get(handle, "/paths/rip.v.04").json()
    assert doc["paths"] == [["rip.v.04", "criticize.v.01", "express.v.01", "communicate.v.01"]]


def test_records_and_single_record(handle):
    doc = get(handle, "/records").json()
    assert len(doc["records"]) == 12
    record = get(handle, "/records/r01").json()["record"]
    assert record["kind"] == "metaphor_vs_literal"
    assert record["specificity"]["verdict"] == "first_more_specific"


def test_report_json(handle):
    response = get(handle, "/report?format=json")
    assert response.status_code == 200
    doc = json.loads(response.text)
    assert doc["counts"]["total"] == 12
    assert doc["schemaVersion"] == 1


def test_unknown_route_404(handle):
    response = get(handle, "/nope")
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "no_such_route"


def test_unknown_record_404(handle):
    response = get(handle, "/records/ghost")
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "record_not_found"


def test_unknown_sense_404(handle):
    assert get(handle, "/synset/ghost.v.01").status_code == 404


def test_bad_query_400(handle):
    assert get(handle, "/synsets?lemma=rip").status_code == 400


# -- mutations -----------------------------------------------------------------


def test_create_record(handle):
    response = post(
        handle,
        "/records",
        {
            "recordId": "new1",
            "kind": "metaphor_vs_literal",
            "term1": "rip.v.04",
            "sentence1": "A new metaphor.",
            "term2": "criticize.v.01",
            "sentence2": "A new literal.",
        },
    )
    assert response.status_code == 201
    doc = response.json()
    assert doc["record"]["valid"] is True
    assert get(handle, "/records/new1").status_code == 200


def test_create_duplicate_record_409(handle):
    body = {
        "recordId": "dup1",
        "kind": "metaphor_vs_literal",
        "term1": "rip.v.04",
        "sentence1": "A.",
        "term2": "criticize.v.01",
        "sentence2": "B.",
    }
    assert post(handle, "/records", body).status_code == 201
    assert post(handle, "/records", body).status_code == 409


def test_create_record_bad_kind_400(handle):
    body = {
        "kind": "nonsense",
        "term1": "rip.v.04",
        "sentence1": "A.",
        "term2": "criticize.v.01",
        "sentence2": "B.",
    }
    assert post(handle, "/records", body).status_code == 400


def test_choose_synset_updates_record(handle):
    response = post(handle, "/records/r02/synset", {"slot": "second", "key": "criticize.v.01"})
    assert response.status_code == 200
    assert response.json()["record"]["term2"] == "criticize.v.01"


def test_choose_synset_unknown_sense_404(handle):
    assert post(handle, "/records/r02/synset", {"slot": "first", "key": "ghost.v.01"}).status_code == 404


def test_paraphrase_sister_creates_same_specificity_pair(handle):
    response = post(
        handle,
        "/records/r01/paraphrase",
        {"mode": "sister", "key": "barrage.v.01", "sentence": "The reviewer barraged the proposal."},
    )
    assert response.status_code == 201
    record = response.json()["record"]
    assert record["kind"] == "metaphor_vs_same_specificity_literal"
    assert record["term1"] == "rip.v.04"
    assert record["term2"] == "barrage.v.01"
    assert record["specificity"]["verdict"] == "same_level"


def test_paraphrase_hyponym_creates_more_specific_pair(handle):
    response = post(
        handle,
        "/records/r01/paraphrase",
        {"mode": "hyponym", "key": "attack.v.02", "sentence": "The reviewer attacked the proposal."},
    )
    assert response.status_code == 201
    record = response.json()["record"]
    assert record["kind"] == "literal_vs_more_specific_literal"
    assert record["term1"] == "criticize.v.01"
    assert record["specificity"]["verdict"] == "second_more_specific"


def test_paraphrase_rejects_non_candidate(handle):
    response = post(
        handle,
        "/records/r01/paraphrase",
        {"mode": "sister", "key": "travel.v.01", "sentence": "Wrong."},
    )
    assert response.status_code == 400


def test_emotion_label_and_idempotency_conflict(handle):
    body = {"annotator": "a9", "label": "first", "idempotencyKey": "once-1"}
    first = post(handle, "/records/r01/emotion", body)
    assert first.status_code == 200
    assert first.json()["record"]["annotatorLabels"]["a9"] == "first"
    second = post(handle, "/records/r01/emotion", body)
    assert second.status_code == 409
    assert second.json()["error"]["code"] == "duplicate_event"


def test_emotion_bad_label_400(handle):
    assert post(handle, "/records/r01/emotion", {"annotator": "a1", "label": "loud"}).status_code == 400


def test_emotion_presentation_recorded(handle, tmp_path):
    post(
        handle,
        "/records/r03/emotion",
        {"annotator": "ux", "label": "same", "presentation": "swapped"},
    )
    session = replay_session(handle.service.log_path)
    last = session.events[-1]
    assert last.payload.get("presentation") == "swapped"


# -- durability and concurrency -------------------------------------------------


def test_event_sourcing_round_trip(service_db, tmp_path):
    store = tmp_path / "store"
    handle = start(service_db, store)
    try:
        post(handle, "/records/r01/emotion", {"annotator": "b1", "label": "first"})
        post(
            handle,
            "/records/r01/paraphrase",
            {"mode": "sister", "key": "attack.v.02", "sentence": "Sister paraphrase."},
        )
        post(handle, "/records/r04/emotion", {"annotator": "b1", "label": "same"})
        records_before = get(handle, "/records").text
        report_before = get(handle, "/report?format=json").text
    finally:
        handle.shutdown()

    restarted = start(service_db, store)
    try:
        assert get(restarted, "/records").text == records_before
        assert get(restarted, "/report?format=json").text == report_before
    finally:
        restarted.shutdown()


def test_concurrent_labels_serialize_without_loss(service_db, tmp_path):
    store = tmp_path / "store"
    handle = start(service_db, store)
    n_threads, per_thread = 8, 5
    errors = []

    def worker(worker_id):
        try:
            with httpx.Client(base_url=handle.url) as client:
                for i in range(per_thread):
                    record_id = f"r{(worker_id + i) % 12 + 1:02d}"
                    response = client.post(
                        f"/records/{record_id}/emotion",
                        json={"annotator": f"w{worker_id}", "label": "first"},
                    )
                    assert response.status_code == 200
        except Exception as exc:  # pragma: no cover - surfaced via errors list
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(n_threads)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    try:
        assert not errors
        session = replay_session(handle.service.log_path)
        assert len(session.events) == n_threads * per_thread
        assert [e.seq for e in session.events] == list(range(1, n_threads * per_thread + 1))
    finally:
        handle.shutdown()


def test_specificity_bytes_match_cli_compare(handle):
    # shared serialization core: the HTTP body equals the CLI's JSON output
    body = get(handle, "/specificity?a=rip.v.04&b=criticize.v.01").text
    completed = subprocess.run(
        [
            sys.executable, "-m", "lexispec", "compare",
            "--a", "rip.v.04", "--b", "criticize.v.01",
            "--fixture", f"{DATA}/mini.wn", "--format", "json",
        ],
        capture_output=True,
        text=True,
        env=dict(os.environ, PYTHONPATH="src"),
    )
    assert completed.returncode == 0
    assert body == completed.stdout


def test_report_bytes_match_cli_analyze(handle, tmp_path):
    body = get(handle, "/report?format=json").text
    completed = subprocess.run(
        [
            sys.executable, "-m", "lexispec", "analyze",
            "--corpus", f"{DATA}/sample_corpus.tsv", "--fixture", f"{DATA}/mini.wn",
            "--store", str(handle.service.log_path.parent), "--format", "json",
        ],
        capture_output=True,
        text=True,
        env=dict(os.environ, PYTHONPATH="src"),
    )
    assert completed.returncode == 0
    assert body == completed.stdout


def test_lexispec_store_env_overrides_flag(tmp_path):
    env_store = tmp_path / "from-env"
    flag_store = tmp_path / "from-flag"
    process = subprocess.Popen(
        [
            sys.executable, "-m", "lexispec", "serve",
            "--fixture", f"{DATA}/mini.wn", "--corpus", f"{DATA}/sample_corpus.tsv",
            "--store", str(flag_store), "--listen", "127.0.0.1:0",
        ],
        env=dict(os.environ, PYTHONPATH="src", LEXISPEC_STORE=str(env_store)),
        stdout=subprocess.PIPE,
        stderr=subprocess.DEVNULL,
        text=True,
    )
    try:
        line = process.stdout.readline()
        assert line.startswith("listening on ")
        deadline = time.monotonic() + 5
        while not (env_store / "session.jsonl").exists() and time.monotonic() < deadline:
            time.sleep(0.05)
        assert (env_store / "session.jsonl").exists()
        assert not flag_store.exists()
    finally:
        process.send_signal(signal.SIGKILL)
        process.wait()


def test_address_in_use(service_db, tmp_path):
    handle = start(service_db, tmp_path / "store-a")
    try:
        db, graph = service_db
        config = ServiceConfig(
            db=db,
            graph=graph,
            corpus_path=f"{DATA}/sample_corpus.tsv",
            store_dir=str(tmp_path / "store-b"),
            port=handle.port,
        )
        with pytest.raises(AddressInUse):
            serve(config)
    finally:
        handle.shutdown()
