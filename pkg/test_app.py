import pytest

from app import request_argv
from hypertype.errors import UsageError


def test_health(client):
    response = client.get('/health')
    assert response.status_code == 200
    assert response.get_json() == {'status': 'ok', 'schema': 1}


def test_the_service_keeps_no_session_state(client):
    assert client.application.secret_key is None
    response = client.get('/health')
    assert 'Set-Cookie' not in response.headers


def test_eval_endpoint(client):
    response = client.post('/api/eval', json={'args': ['2f1', 'a=1', 'b=1', 'c=2', 'z=0.5']})
    assert response.status_code == 200
    body = response.get_json()
    assert body['command'] == 'eval'
    assert body['value'].startswith('1.386294361119')


def test_options_become_flags(client):
    response = client.post('/api/symmetries', json={'args': ['0f1'], 'options': {'verify': True, 'table': False}})
    body = response.get_json()
    assert response.status_code == 200
    assert body['order'] == 2
    assert 'worst_residual' in body
    assert 'composition_table' not in body


def test_request_argv():
    argv = request_argv('suite', {'args': ['spot'], 'options': {'seed': 2, 'max_terms': 100, 'verbose': True,
                                                                 'format': 'text', 'tol': None}})
    assert argv == ['suite', 'spot', '--seed', '2', '--max-terms', '100', '--verbose']
    with pytest.raises(UsageError):
        request_argv('eval', ['2f1'])
    with pytest.raises(UsageError):
        request_argv('eval', {'args': '2f1'})


@pytest.mark.parametrize('body', [
    ['not', 'an', 'object'],
    {'args': ['2f1', 'a=1', 'b=1', 'c=2']},
    {'args': ['2f1', 'a=1', 'b=1', 'c=2', 'z=0.5'], 'options': {'tol': -1}},
])
def test_bad_requests(client, body):
    response = client.post('/api/eval', json=body)
    assert response.status_code == 400
    assert response.get_json()['error'] == 'usage'


def test_domain_error_kind(client):
    response = client.post('/api/eval', json={'args': ['2f1', 'a=1', 'b=1', 'c=2', 'z=1.5']})
    assert response.status_code == 400
    assert response.get_json()['error'] == 'out_of_domain'


def test_failed_check_is_unprocessable(client):
    response = client.post('/api/quadcheck', json={'args': ['2f1-euler'], 'options': {'contour': '[1, 2]'}})
    assert response.status_code == 422


def test_unknown_subcommand(client):
    response = client.post('/api/frobnicate', json={})
    assert response.status_code == 404


def test_symmetry_group(client):
    body = client.get('/api/symmetries/2f1').get_json()
    assert body['order'] == 48
    assert len(body['elements']) == 48


def test_kummer_table(client):
    body = client.get('/api/kummer/At0Index0').get_json()
    assert body['kind'] == '2f1:At0Index0'
    assert len(body['expressions']) == 4
    assert client.get('/api/kummer/1f1:AtPlusInf').status_code == 400
