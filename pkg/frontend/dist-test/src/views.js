/**
 * DOM rendering for the chat session and advise panel view models.
 *
 * Views are re-rendered from scratch on every state change; the state
 * objects own all data and the views own no state of their own.
 */
const LANGUAGES = [
    { code: 'EN', label: 'English' },
    { code: 'ES', label: 'Español' },
];
function el(tag, className, text) {
    const node = document.createElement(tag);
    if (className) {
        node.className = className;
    }
    if (text !== undefined) {
        node.textContent = text;
    }
    return node;
}
function errorBanner(message, onRetry) {
    const banner = el('div', 'error-banner');
    banner.append(el('span', 'error-text', message));
    const retry = el('button', 'retry-button', 'Retry');
    retry.addEventListener('click', onRetry);
    banner.append(retry);
    return banner;
}
export function renderChat(root, session) {
    const draw = () => {
        root.replaceChildren();
        if (!session.started) {
            const picker = el('div', 'language-picker');
            picker.append(el('p', 'picker-label', 'Choose a language to start chatting:'));
            for (const lang of LANGUAGES) {
                const button = el('button', 'language-button', lang.label);
                button.dataset.language = lang.code;
                button.disabled = session.pending;
                button.addEventListener('click', () => void session.start(lang.code));
                picker.append(button);
            }
            if (session.error) {
                picker.append(errorBanner(session.error, () => void session.retry()));
            }
            root.append(picker);
            return;
        }
        const transcript = el('div', 'transcript');
        for (const bubble of session.bubbles) {
            const css = ['bubble', `bubble-${bubble.role}`];
            if (bubble.kind) {
                css.push(`bubble-${bubble.kind}`);
            }
            const node = el('div', css.join(' '));
            node.append(el('p', 'bubble-text', bubble.text));
            if (bubble.kind === 'suggestion' && bubble.suggestion) {
                const ask = el('button', 'suggestion-button', bubble.suggestion);
                ask.disabled = session.pending;
                ask.addEventListener('click', () => void session.acceptSuggestion(bubble.suggestion));
                node.append(ask);
            }
            transcript.append(node);
        }
        root.append(transcript);
        if (session.error) {
            root.append(errorBanner(session.error, () => void session.retry()));
        }
        const form = el('form', 'chat-form');
        const input = el('input', 'chat-input');
        input.type = 'text';
        input.placeholder = 'Ask about an OpenMP mistake…';
        input.disabled = session.pending;
        const send = el('button', 'send-button', 'Send');
        send.type = 'submit';
        send.disabled = session.pending;
        form.append(input, send);
        form.addEventListener('submit', (event) => {
            event.preventDefault();
            if (session.canSend(input.value)) {
                void session.send(input.value);
                input.value = '';
            }
        });
        root.append(form);
        if (!session.pending) {
            input.focus();
        }
    };
    session.subscribe(draw);
    draw();
}
export function renderAdvise(root, panel) {
    const textarea = el('textarea', 'advise-input');
    textarea.placeholder = 'Paste a C/C++ snippet with OpenMP pragmas…';
    textarea.rows = 10;
    const submit = el('button', 'advise-submit', 'Check snippet');
    const results = el('div', 'advise-results');
    const redrawControls = () => {
        submit.disabled = !panel.canSubmit(textarea.value);
        textarea.disabled = panel.pending;
    };
    const drawResults = () => {
        results.replaceChildren();
        if (panel.error) {
            results.append(errorBanner(panel.error, () => void panel.submit(textarea.value)));
            return;
        }
        if (panel.findings === null) {
            return;
        }
        if (panel.findings.length === 0) {
            results.append(el('p', 'advise-empty', 'No known mistake patterns found.'));
            return;
        }
        for (const finding of panel.findings) {
            const card = el('div', 'finding-card');
            const head = el('div', 'finding-head');
            head.append(el('span', `severity severity-${finding.severity.toLowerCase()}`, finding.severity));
            head.append(el('span', 'finding-line', `line ${finding.line}`));
            head.append(el('span', 'finding-rule', finding.rule_id));
            card.append(head);
            card.append(el('p', 'finding-message', finding.message));
            card.append(el('pre', 'finding-excerpt', finding.excerpt));
            if (finding.answer) {
                card.append(el('p', 'finding-answer', finding.answer));
            }
            results.append(card);
        }
    };
    textarea.addEventListener('input', redrawControls);
    submit.addEventListener('click', () => void panel.submit(textarea.value));
    panel.subscribe(() => {
        redrawControls();
        drawResults();
    });
    root.replaceChildren(textarea, submit, results);
    redrawControls();
}
