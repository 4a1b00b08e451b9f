/**
 * Typed client for the ompmentor HTTP API (see docs/api.md in the
 * service repository). All UI traffic goes through this module; nothing
 * else touches fetch, and the UI renders only these documented shapes.
 */
export class ApiRequestError extends Error {
    constructor(status, code, message) {
        super(message);
        this.status = status;
        this.code = code;
        this.name = 'ApiRequestError';
    }
}
async function parseError(response) {
    let code = 'error';
    let message = `request failed with status ${response.status}`;
    try {
        const body = await response.json();
        if (body && body.error) {
            code = body.error.code ?? code;
            message = body.error.message ?? message;
        }
    }
    catch {
        // non-JSON error body; keep the generic message
    }
    return new ApiRequestError(response.status, code, message);
}
export class ApiClient {
    constructor(baseUrl, fetchFn = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
    }
    async request(path, init) {
        const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
        if (!response.ok) {
            throw await parseError(response);
        }
        return (await response.json());
    }
    post(path, body) {
        return this.request(path, {
            method: 'POST',
            headers: { 'Content-Type': 'application/json' },
            body: JSON.stringify(body),
        });
    }
    createConversation(language) {
        return this.post('/v1/conversations', language ? { language } : {});
    }
    sendMessage(conversationId, text) {
        return this.post(`/v1/conversations/${conversationId}/messages`, { text });
    }
    advise(code) {
        return this.post('/v1/advise', { code });
    }
    knowledgeBase(lang) {
        return this.request(`/v1/kb?lang=${encodeURIComponent(lang)}`);
    }
    health() {
        return this.request('/v1/health');
    }
}
