/**
 * View models for the chat session and the advise panel.
 *
 * All transcript and panel state lives here, independent of the DOM, so
 * the behavior is testable without a browser. Views subscribe and
 * re-render on every change. One message is in flight per conversation:
 * input stays disabled while `pending` is true.
 */
import { ApiRequestError } from './api.js';
class Observable {
    constructor() {
        this.listeners = [];
    }
    subscribe(listener) {
        this.listeners.push(listener);
    }
    notify() {
        for (const listener of this.listeners) {
            listener();
        }
    }
}
function describe(error) {
    if (error instanceof ApiRequestError) {
        return error.message;
    }
    return 'Could not reach the service.';
}
export class ChatSession extends Observable {
    constructor(client) {
        super();
        this.client = client;
        this.bubbles = [];
        this.pending = false;
        this.error = null;
        this.conversationId = null;
        this.language = null;
        this.lastAttempt = null;
    }
    get started() {
        return this.conversationId !== null;
    }
    async start(language) {
        await this.attempt(async () => {
            const started = await this.client.createConversation(language);
            this.conversationId = started.conversation_id;
            this.language = started.language;
            this.bubbles.push({ role: 'assistant', kind: 'welcome', text: started.welcome.text });
        });
    }
    /** Empty input is blocked client-side; whitespace does not count. */
    canSend(text) {
        return this.started && !this.pending && text.trim().length > 0;
    }
    async send(text) {
        const question = text.trim();
        if (!this.canSend(question) || this.conversationId === null) {
            return;
        }
        const id = this.conversationId;
        this.bubbles.push({ role: 'user', text: question });
        await this.attempt(async () => {
            const reply = await this.client.sendMessage(id, question);
            this.bubbles.push({
                role: 'assistant',
                kind: reply.kind,
                text: reply.text,
                suggestion: reply.suggestion,
            });
        });
    }
    /** A suggestion bubble resubmits its primary variation when clicked. */
    async acceptSuggestion(suggestion) {
        await this.send(suggestion);
    }
    /** Re-run the request behind the error banner. */
    async retry() {
        const attempt = this.lastAttempt;
        if (attempt === null || this.pending) {
            return;
        }
        this.error = null;
        this.notify();
        await this.runPending(attempt);
    }
    async attempt(action) {
        this.lastAttempt = action;
        this.error = null;
        this.notify();
        await this.runPending(action);
    }
    async runPending(action) {
        this.pending = true;
        this.notify();
        try {
            await action();
            this.lastAttempt = null;
        }
        catch (error) {
            this.error = describe(error);
        }
        finally {
            this.pending = false;
            this.notify();
        }
    }
}
export class AdvisePanel extends Observable {
    constructor(client) {
        super();
        this.client = client;
        /** null until the first scan; [] afterwards means an explicit empty state. */
        this.findings = null;
        this.pending = false;
        this.error = null;
    }
    canSubmit(code) {
        return !this.pending && code.trim().length > 0;
    }
    async submit(code) {
        if (!this.canSubmit(code)) {
            return;
        }
        this.pending = true;
        this.error = null;
        this.notify();
        try {
            const result = await this.client.advise(code);
            this.findings = result.findings;
        }
        catch (error) {
            this.error = describe(error);
        }
        finally {
            this.pending = false;
            this.notify();
        }
    }
}
